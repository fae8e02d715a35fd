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

#ifndef airs_scenario_H
#define airs_scenario_H

#include "airs/fading.hpp"
#include "airs/geometry.hpp"
#include "airs/phase_control.hpp"

#include <string>
#include <vector>

namespace airs
{
    inline constexpr double speed_of_light = 299792458.0;

    struct ScenarioConfig
    {
        double carrier_hz = 2.4e9;
        double k_airs = 1.0; // linear
        double k_irs = 1.0;  // linear
        geometry::Scene scene;
        fading::ClusterParams clusters;
        phase::PhaseMethod method;

        // Method 1 only: drop the surface paths instead of reflecting with zero phase.
        bool exclude_irs_path = false;

        // Frequency grid used by the FCF estimator and by wideband capacity.
        double bandwidth_hz = 100e6;
        int frequency_bins = 64;

        // 0 evaluates capacity on the f = 0 tap sum, otherwise the capacity is averaged
        // over this many bins across `bandwidth_hz`.
        int capacity_bins = 0;

        double wavelength() const { return speed_of_light / carrier_hz; }
        double k_rice() const { return k_airs + k_irs; }
    };

    // Reference parameter set: 2.4 GHz, 16 clusters x 20 rays, 10 x 10 half-wavelength
    // panels, IRS at (100, 50, 10) m, AIRS at (75, 75, 30) m moving at 5 m/s, Rx at 30 m/s.
    ScenarioConfig default_config();

    // Throws config_error on hard violations. Returns soft warnings (unit sizes outside
    // [lambda/10, lambda/2]).
    std::vector<std::string> validate(const ScenarioConfig &config);

    double db_to_linear(double db);
}

#endif
