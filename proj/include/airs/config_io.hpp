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

#ifndef airs_config_io_H
#define airs_config_io_H

#include "airs/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace airs
{
    // Scenario plus the optional run settings a config file may carry.
    struct ConfigFile
    {
        ScenarioConfig scenario;
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> realizations;
    };

    // YAML scenario description. Missing keys keep their default_config() values,
    // unknown keys are rejected. Angles accept plain radians or expressions such as
    // "pi/5", "0.25*pi" or "-3pi/4". Throws config_error.
    ConfigFile parse_config_file(const std::string &text);
    ConfigFile read_config_file(const std::filesystem::path &path);

    ScenarioConfig parse_config(const std::string &text);
    ScenarioConfig load_config(const std::filesystem::path &path);

    // Evaluates an angle expression: [sign] [number] [*] [pi] [/ number].
    double parse_angle(const std::string &expr);

    // Full, normalized YAML rendering of a config. Values are written with 17 significant
    // digits, so parse_config(canonical_config(c)) reproduces c exactly.
    std::string canonical_config(const ScenarioConfig &config);

    // FNV-1a 64 of canonical_config(), as 16 hex digits.
    std::string config_hash(const ScenarioConfig &config);
}

#endif
