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

#ifndef airs_presets_H
#define airs_presets_H

#include "airs/results.hpp"
#include "airs/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace airs
{
    inline constexpr std::size_t default_correlation_realizations = 2000;
    inline constexpr std::size_t default_capacity_realizations = 500;

    struct PresetOptions
    {
        std::uint64_t seed = 1;
        std::optional<std::size_t> realizations; // unset: per-statistic defaults above
        unsigned workers = 0;                    // 0: AIRS_SIM_WORKERS or hardware concurrency
        std::function<void(const std::string &)> progress;
    };

    // acf_fig3, ccf_fig4, ccf_time_fig5, fcf_fig6, capacity_fig7, custom.
    const std::vector<std::string> &preset_names();

    // Computes the tables of a preset on top of `base`. Every derived scenario is validated
    // with the same rules as user configs. Throws std::invalid_argument for unknown names.
    std::vector<ResultTable> build_preset(const std::string &name, const ScenarioConfig &base,
                                          const PresetOptions &options);

    // build_preset() followed by one CSV per table in `out_dir` (created if missing).
    std::vector<std::filesystem::path> run_preset(const std::string &name, const ScenarioConfig &base,
                                                  const std::filesystem::path &out_dir, const PresetOptions &options);
}

#endif
