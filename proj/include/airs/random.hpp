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

#ifndef airs_random_H
#define airs_random_H

#include <cstdint>
#include <random>

namespace airs
{
    // Seedable random source. A stream is identified by (seed, stream, substream), so
    // every ensemble member owns independent, reproducible draws regardless of the order
    // or the thread in which members are evaluated.
    class RandomStream
    {
    public:
        explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t substream = 0);

        double uniform();       // [0, 1), 53-bit resolution
        double uniform_open();  // (0, 1)
        double uniform_angle(); // [0, 2 pi)
        double normal();        // standard Gaussian via the inverse CDF

        std::mt19937_64 &engine() { return engine_; }

    private:
        std::mt19937_64 engine_;
    };

    // Standard normal CDF and its inverse.
    double normal_cdf(double x);
    double normal_quantile(double p);
}

#endif
