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

// Global-frame brute-force reference model for tests.
//
// Everything is rebuilt from positions in one Cartesian frame: element, unit and
// scatterer coordinates are placed explicitly, rotations are applied as successive
// Rodrigues rotations, distances and angles come straight from coordinate differences.
// No library geometry, phase or channel routine is used.

#ifndef airs_tests_oracle_H
#define airs_tests_oracle_H

#include "airs/fading.hpp"
#include "airs/scenario.hpp"

#include <array>
#include <complex>
#include <random>
#include <vector>

namespace oracle
{
    using cplx = std::complex<double>;
    using V3 = std::array<double, 3>;

    struct Positions
    {
        V3 tx, rx;                        // active elements
        V3 airs_center, irs_center;
        std::vector<V3> airs_units, irs_units;
        std::vector<V3> scatterers;       // per ray, cluster-major
    };

    struct Angles
    {
        double airs_dep_azimuth, airs_dep_elevation, airs_arr_azimuth, airs_arr_elevation;
        double irs_arr_azimuth, irs_arr_elevation;
        std::vector<double> ray_azimuth, ray_elevation; // at time t
    };

    struct Result
    {
        Positions pos;
        Angles angles;
        std::vector<double> airs_unit_paths, irs_unit_paths; // Tx -> unit -> Rx [m]
        std::vector<double> airs_phases, irs_phases;
        cplx airs_gain, irs_gain;
        std::vector<cplx> cluster_gains;
        double airs_delay, irs_delay;
        std::vector<double> cluster_delays;
        double airs_doppler, irs_doppler;
        std::vector<double> ray_doppler;
    };

    // `random_airs` / `random_irs` supply the frozen phases when the method is random.
    // p and q are 1-based antenna indices.
    Result evaluate(const airs::ScenarioConfig &config, const airs::fading::ClusterRealization &clusters, int p,
                    int q, double t, const std::vector<double> &random_airs = {},
                    const std::vector<double> &random_irs = {});

    // Desk-scale scenario: panels up to 3 x 3, at most 2 clusters of at most 4 rays, 2 x 2
    // antennas, distances of a few meters, random orientations, speeds and phase method.
    airs::ScenarioConfig random_desk_config(std::mt19937_64 &g);
}

#endif
