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

#ifndef airs_fading_H
#define airs_fading_H

#include "airs/random.hpp"

#include <span>
#include <vector>

namespace airs::fading
{
    struct AngleLaw
    {
        double mean = 0.0;  // mu_theta [rad]
        double sigma = 1.0; // sigma_theta [rad]
        double low = 0.0;   // theta_low [rad]
        double up = 0.0;    // theta_up [rad]
    };

    struct ClusterParams
    {
        int clusters = 16;             // L
        int rays = 20;                 // M, scatterers per cluster
        double delay_scaling = 2.3;    // r_tau
        double delay_spread = 363e-9;  // sigma_tau [s]
        double shadowing_db = 4.0;     // zeta, std of Z_l [dB]
        AngleLaw angles;               // shared by azimuth and elevation
        double initial_range = 60.0;   // eps^{S,R}(0) [m], shared by all rays
    };

    struct Ray
    {
        double azimuth;   // alpha_R^{l,S}(0) [rad]
        double elevation; // beta_R^{l,S}(0) [rad]
        double phase;     // phi_{l,m} in [0, 2 pi)
    };

    struct Cluster
    {
        double delay; // tau_l, excess delay [s]
        double power; // normalized P_l
        std::vector<Ray> rays;
    };

    struct ClusterRealization
    {
        std::vector<Cluster> clusters;
        double initial_range = 0.0;
    };

    // Inverse-CDF draw from the Gaussian (mean, sigma) restricted to [low, up].
    // Infinite bounds are accepted.
    double sample_truncated_gaussian(double mean, double sigma, double low, double up, RandomStream &rng);

    // Exponential draws -r_tau sigma_tau ln(u), before shift and sort.
    std::vector<double> sample_raw_cluster_delays(const ClusterParams &params, RandomStream &rng);

    // Raw draws shifted so the smallest delay is 0, sorted ascending.
    std::vector<double> sample_cluster_delays(const ClusterParams &params, RandomStream &rng);

    // Exponential delay decay with log-normal shadowing, normalized to unit sum.
    std::vector<double> cluster_powers(std::span<const double> delays, const ClusterParams &params,
                                       RandomStream &rng);

    // Draw order: delays, shadowing terms, then per cluster and ray (azimuth, elevation, phase).
    ClusterRealization generate_realization(const ClusterParams &params, RandomStream &rng);

    void validate(const ClusterParams &params);
}

#endif
