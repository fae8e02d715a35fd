// SPDX-License-Identifier: Apache-2.0
//
// airs-channel: wideband channel simulator for AIRS/IRS-assisted MIMO links
// Copyright (C) 2026 The airs-channel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "airs/fading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace airs::fading
{
    double sample_truncated_gaussian(double mean, double sigma, double low, double up, RandomStream &rng)
    {
        if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(mean))
            throw std::invalid_argument("Truncated Gaussian requires finite mean and sigma > 0");
        if (!(low < up))
            throw std::invalid_argument("Truncated Gaussian requires low < up");

        double a = (low - mean) / sigma;
        double b = (up - mean) / sigma;

        // Work in the lower tail where the CDF carries full relative precision.
        const bool flip = a > 0.0;
        if (flip)
        {
            std::swap(a, b);
            a = -a;
            b = -b;
        }

        const double cdf_a = normal_cdf(a);
        const double cdf_b = normal_cdf(b);
        const double u = rng.uniform_open();
        double p = cdf_a + u * (cdf_b - cdf_a);

        double x;
        if (p <= 0.0)
            x = a;
        else if (p >= 1.0)
            x = b;
        else
            x = std::clamp(normal_quantile(p), a, b);

        if (flip)
            x = -x;
        return std::clamp(mean + sigma * x, low, up);
    }

    std::vector<double> sample_raw_cluster_delays(const ClusterParams &params, RandomStream &rng)
    {
        std::vector<double> out(std::size_t(params.clusters));
        const double scale = params.delay_scaling * params.delay_spread;
        for (auto &d : out)
            d = -scale * std::log(rng.uniform_open());
        return out;
    }

    std::vector<double> sample_cluster_delays(const ClusterParams &params, RandomStream &rng)
    {
        auto delays = sample_raw_cluster_delays(params, rng);
        const double first = *std::min_element(delays.begin(), delays.end());
        for (auto &d : delays)
            d -= first;
        std::sort(delays.begin(), delays.end());
        return delays;
    }

    std::vector<double> cluster_powers(std::span<const double> delays, const ClusterParams &params,
                                       RandomStream &rng)
    {
        const double decay = (params.delay_scaling - 1.0) / (params.delay_scaling * params.delay_spread);
        std::vector<double> powers(delays.size());
        for (std::size_t l = 0; l < delays.size(); ++l)
        {
            if (delays[l] < 0.0)
                throw std::invalid_argument("Cluster delays must be non-negative");
            const double z = params.shadowing_db * rng.normal();
            powers[l] = std::exp(-delays[l] * decay) * std::pow(10.0, -z / 10.0);
        }

        const double total = std::accumulate(powers.begin(), powers.end(), 0.0);
        for (auto &p : powers)
            p /= total;
        return powers;
    }

    ClusterRealization generate_realization(const ClusterParams &params, RandomStream &rng)
    {
        validate(params);

        const auto delays = sample_cluster_delays(params, rng);
        const auto powers = cluster_powers(delays, params, rng);
        const AngleLaw &law = params.angles;

        ClusterRealization out;
        out.initial_range = params.initial_range;
        out.clusters.resize(delays.size());
        for (std::size_t l = 0; l < delays.size(); ++l)
        {
            Cluster &c = out.clusters[l];
            c.delay = delays[l];
            c.power = powers[l];
            c.rays.resize(std::size_t(params.rays));
            for (Ray &r : c.rays)
            {
                r.azimuth = sample_truncated_gaussian(law.mean, law.sigma, law.low, law.up, rng);
                r.elevation = sample_truncated_gaussian(law.mean, law.sigma, law.low, law.up, rng);
                r.phase = rng.uniform_angle();
            }
        }
        return out;
    }

    void validate(const ClusterParams &p)
    {
        if (p.clusters < 1)
            throw std::invalid_argument("Cluster count must be >= 1");
        if (p.rays < 1)
            throw std::invalid_argument("Rays per cluster must be >= 1");
        if (!(p.delay_scaling > 1.0))
            throw std::invalid_argument("Delay scaling must be > 1");
        if (!(p.delay_spread > 0.0))
            throw std::invalid_argument("Delay spread must be > 0");
        if (!(p.shadowing_db >= 0.0))
            throw std::invalid_argument("Shadowing std must be >= 0");
        if (!(p.angles.sigma > 0.0) || !(p.angles.low < p.angles.up))
            throw std::invalid_argument("Angle law requires sigma > 0 and low < up");
        if (!(p.initial_range > 0.0))
            throw std::invalid_argument("Initial scatterer range must be > 0");
    }
}
