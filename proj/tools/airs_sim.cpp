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

// airs_sim: command-line front end.
//
//   airs_sim simulate --preset <name> [--config <path>] [--seed <u64>] [--realizations <n>] [--out <dir>]
//   airs_sim validate --config <path>
//   airs_sim print-defaults
//
// Exit codes: 0 success, 2 configuration error, 3 runtime math error, 1 anything else.

#include "airs/config_io.hpp"
#include "airs/errors.hpp"
#include "airs/presets.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace
{
    constexpr int exit_config = 2;
    constexpr int exit_math = 3;

    airs::ConfigFile load(const std::string &path)
    {
        if (path.empty())
            return airs::parse_config_file("");
        return airs::read_config_file(path);
    }

    int simulate(const std::string &config_path, const std::string &preset, std::optional<std::uint64_t> seed,
                 std::optional<std::size_t> realizations, unsigned workers, const std::string &out_dir, bool quiet)
    {
        const auto file = load(config_path);
        for (const auto &w : airs::validate(file.scenario))
            std::cerr << "warning: " << w << "\n";

        airs::PresetOptions options;
        options.seed = seed.value_or(file.seed.value_or(1));
        options.realizations = realizations ? realizations : file.realizations;
        options.workers = workers;
        if (!quiet)
            options.progress = [](const std::string &what) { std::cerr << "computing " << what << "\n"; };

        for (const auto &path : airs::run_preset(preset, file.scenario, out_dir, options))
            std::cout << path.string() << "\n";
        return 0;
    }

    int validate(const std::string &config_path)
    {
        const auto file = load(config_path);
        for (const auto &w : airs::validate(file.scenario))
            std::cout << "warning: " << w << "\n";
        std::cout << "ok " << airs::config_hash(file.scenario) << "\n";
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Wideband AIRS/IRS-assisted MIMO channel simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", airs::tool_version);

    std::string config_path, preset, out_dir = ".";
    std::uint64_t seed = 0;
    std::size_t realizations = 0;
    unsigned workers = 0;
    bool quiet = false;

    auto *sim = app.add_subcommand("simulate", "Run an experiment preset and write CSV tables");
    sim->add_option("--config", config_path, "Scenario file (YAML); defaults when omitted")->check(CLI::ExistingFile);
    sim->add_option("--preset", preset, "Experiment preset")
        ->required()
        ->check(CLI::IsMember(airs::preset_names()));
    auto *seed_opt = sim->add_option("--seed", seed, "Base seed (default: run.seed from the config, else 1)");
    auto *real_opt = sim->add_option("--realizations", realizations, "Ensemble size")->check(CLI::PositiveNumber);
    sim->add_option("--out", out_dir, "Output directory");
    sim->add_option("--workers", workers, "Worker threads (default: AIRS_SIM_WORKERS or all cores)");
    sim->add_flag("--quiet", quiet, "No progress lines on stderr");

    auto *val = app.add_subcommand("validate", "Check a scenario file");
    val->add_option("--config", config_path, "Scenario file (YAML)")->required()->check(CLI::ExistingFile);

    auto *defaults = app.add_subcommand("print-defaults", "Print the default scenario as YAML");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    try
    {
        if (*sim)
            return simulate(config_path, preset, *seed_opt ? std::optional<std::uint64_t>(seed) : std::nullopt,
                            *real_opt ? std::optional<std::size_t>(realizations) : std::nullopt, workers, out_dir,
                            quiet);
        if (*val)
            return validate(config_path);
        if (*defaults)
        {
            std::cout << airs::canonical_config(airs::default_config());
            return 0;
        }
    }
    catch (const airs::config_error &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    catch (const airs::geometry_error &e)
    {
        std::cerr << "geometry error: " << e.what() << "\n";
        return exit_math;
    }
    catch (const airs::numeric_error &e)
    {
        std::cerr << "numeric error: " << e.what() << "\n";
        return exit_math;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
