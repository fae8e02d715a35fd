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

#include "airs/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace airs::stats
{
    Realization draw_realization(const channel::ChannelModel &model, std::uint64_t seed, std::size_t index)
    {
        const auto &cfg = model.config();
        RandomStream cluster_rng(seed, index, 0);
        RandomStream phase_rng(seed, index, 1);

        Realization r;
        r.field = model.place_scatterers(fading::generate_realization(cfg.clusters, cluster_rng));
        r.schedule = phase::PhaseSchedule::make(cfg.method, cfg.scene, model.wavelength(), phase_rng);
        return r;
    }

    unsigned resolve_workers(unsigned requested)
    {
        if (requested > 0)
            return requested;
        if (const char *env = std::getenv("AIRS_SIM_WORKERS"))
        {
            char *end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && v > 0)
                return unsigned(v);
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? hw : 1;
    }

    void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)> &fn)
    {
        workers = std::max(1u, std::min<unsigned>(resolve_workers(workers), unsigned(std::max<std::size_t>(n, 1))));
        if (workers == 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                fn(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;

        auto worker = [&]
        {
            while (!failed.load(std::memory_order_relaxed))
            {
                const std::size_t i = next.fetch_add(1);
                if (i >= n)
                    return;
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        };

        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        pool.clear();

        if (error)
            std::rethrow_exception(error);
    }

    void CompensatedSum::add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
}
