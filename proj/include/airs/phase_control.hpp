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

#ifndef airs_phase_control_H
#define airs_phase_control_H

#include "airs/geometry.hpp"
#include "airs/random.hpp"

#include <vector>

namespace airs::phase
{
    enum class PhaseMethodKind
    {
        zero = 1,       // all units at 0
        random = 2,     // frozen i.i.d. U[0, 2 pi) per unit
        co_aligned = 3, // cancels every unit's path phase to a common target
        quantized = 4   // co_aligned rounded to the midpoint of one of 2^bits intervals
    };

    struct PhaseMethod
    {
        PhaseMethodKind kind = PhaseMethodKind::co_aligned;
        int bits = 2;        // quantized only
        double target = 0.0; // desired phase at the Rx [rad], in [0, 2 pi)
    };

    // Reduces to [0, 2 pi).
    double wrap_phase(double phi);

    // Midpoint of the interval of width 2 pi / 2^bits that contains phi (mod 2 pi).
    double quantize_phase(double phi, int bits);

    std::vector<double> phases_method1(const geometry::SurfacePanel &panel, double t);
    std::vector<double> phases_method2(const geometry::SurfacePanel &panel, RandomStream &rng);

    // Per-unit phases k0 * (path length via unit) + target, evaluated for the antenna
    // pair `reference`. With reference offsets zero this is the (p, q) = (1, 1) design.
    std::vector<double> phases_method3(const geometry::Scene &scene, geometry::Surface surface, double t,
                                       const geometry::AntennaPair &reference, double target,
                                       double wavelength);

    std::vector<double> phases_method4(const geometry::Scene &scene, geometry::Surface surface, double t,
                                       const geometry::AntennaPair &reference, double target,
                                       double wavelength, int bits);

    // Lazily evaluated phase configuration of both surfaces. Random phases are frozen at
    // construction; co-aligned phases follow the geometry at each query time.
    class PhaseSchedule
    {
    public:
        PhaseSchedule() = default;

        static PhaseSchedule make(const PhaseMethod &method, const geometry::Scene &scene, double wavelength,
                                  RandomStream &rng, const geometry::AntennaPair &reference = {});

        const PhaseMethod &method() const { return method_; }

        std::vector<double> phases(geometry::Surface surface, double t) const;
        double phase(geometry::Surface surface, int unit, double t) const;

    private:
        PhaseMethod method_{PhaseMethodKind::zero, 1, 0.0};
        geometry::Scene scene_;
        double wavelength_ = 1.0;
        geometry::AntennaPair reference_;
        std::vector<double> random_airs_;
        std::vector<double> random_irs_;
    };
}

#endif
