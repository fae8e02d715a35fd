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

#include "airs/random.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace airs
{
    RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream)
    {
        std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32),
                          std::uint32_t(stream), std::uint32_t(stream >> 32),
                          std::uint32_t(substream), std::uint32_t(substream >> 32)};
        engine_.seed(seq);
    }

    double RandomStream::uniform()
    {
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    double RandomStream::uniform_open()
    {
        return (double(engine_() >> 12) + 0.5) * 0x1.0p-52;
    }

    double RandomStream::uniform_angle()
    {
        const double a = 2.0 * std::numbers::pi * uniform();
        return a < 2.0 * std::numbers::pi ? a : 0.0;
    }

    double RandomStream::normal()
    {
        return normal_quantile(uniform_open());
    }

    double normal_cdf(double x)
    {
        return 0.5 * std::erfc(-x / std::numbers::sqrt2);
    }

    double normal_quantile(double p)
    {
        if (!(p > 0.0 && p < 1.0))
            throw std::domain_error("Normal quantile requires p in (0, 1)");
        return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
    }
}
