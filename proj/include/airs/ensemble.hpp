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

#ifndef airs_ensemble_H
#define airs_ensemble_H

#include "airs/channel.hpp"

#include <complex>
#include <cstdint>
#include <functional>

namespace airs::stats
{
    struct EnsembleSpec
    {
        std::size_t realizations = 2000;
        std::uint64_t seed = 1;
        unsigned workers = 0; // 0: AIRS_SIM_WORKERS, else hardware concurrency
    };

    // One ensemble member: an independent cluster draw and, for random surface
    // phases, an independent frozen phase configuration.
    struct Realization
    {
        channel::ScattererField field;
        phase::PhaseSchedule schedule;
    };

    Realization draw_realization(const channel::ChannelModel &model, std::uint64_t seed, std::size_t index);

    unsigned resolve_workers(unsigned requested);

    // Runs fn(i) for i in [0, n) on `workers` threads. The first exception thrown by any
    // task is rethrown after all workers stop.
    void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)> &fn);

    // Neumaier-compensated sum. Results depend only on the order of add() calls.
    class CompensatedSum
    {
    public:
        void add(double x);
        double value() const { return sum_ + carry_; }

    private:
        double sum_ = 0.0;
        double carry_ = 0.0;
    };

    class CompensatedComplexSum
    {
    public:
        void add(std::complex<double> x)
        {
            re_.add(x.real());
            im_.add(x.imag());
        }
        std::complex<double> value() const { return {re_.value(), im_.value()}; }

    private:
        CompensatedSum re_, im_;
    };

    // |h|^2 computed as Re(conj(h) h), the same expression used for correlation products.
    inline double power(std::complex<double> h)
    {
        return (std::conj(h) * h).real();
    }
}

#endif
