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

#include "airs/phase_control.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace airs::phase
{
    using geometry::Surface;

    double wrap_phase(double phi)
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        double r = std::fmod(phi, two_pi);
        if (r < 0.0)
            r += two_pi;
        return r < two_pi ? r : 0.0;
    }

    double quantize_phase(double phi, int bits)
    {
        if (bits < 1 || bits > 30)
            throw std::invalid_argument("Quantizer bits must be in [1, 30]");
        const double levels = std::ldexp(1.0, bits);
        const double width = 2.0 * std::numbers::pi / levels;
        double idx = std::floor(wrap_phase(phi) / width);
        if (idx >= levels)
            idx = levels - 1.0;
        return (idx + 0.5) * width;
    }

    std::vector<double> phases_method1(const geometry::SurfacePanel &panel, double)
    {
        return std::vector<double>(std::size_t(panel.unit_count()), 0.0);
    }

    std::vector<double> phases_method2(const geometry::SurfacePanel &panel, RandomStream &rng)
    {
        std::vector<double> out(std::size_t(panel.unit_count()));
        for (auto &p : out)
            p = rng.uniform_angle();
        return out;
    }

    std::vector<double> phases_method3(const geometry::Scene &scene, Surface surface, double t,
                                       const geometry::AntennaPair &reference, double target, double wavelength)
    {
        const double k0 = 2.0 * std::numbers::pi / wavelength;
        auto out = geometry::unit_path_lengths(scene, surface, t, reference);
        for (auto &p : out)
            p = wrap_phase(target + k0 * p);
        return out;
    }

    std::vector<double> phases_method4(const geometry::Scene &scene, Surface surface, double t,
                                       const geometry::AntennaPair &reference, double target, double wavelength,
                                       int bits)
    {
        auto out = phases_method3(scene, surface, t, reference, target, wavelength);
        for (auto &p : out)
            p = quantize_phase(p, bits);
        return out;
    }

    PhaseSchedule PhaseSchedule::make(const PhaseMethod &method, const geometry::Scene &scene, double wavelength,
                                      RandomStream &rng, const geometry::AntennaPair &reference)
    {
        if (method.kind == PhaseMethodKind::quantized && (method.bits < 1 || method.bits > 30))
            throw std::invalid_argument("Quantizer bits must be in [1, 30]");
        if (!(wavelength > 0.0))
            throw std::invalid_argument("Wavelength must be positive");

        PhaseSchedule s;
        s.method_ = method;
        s.scene_ = scene;
        s.wavelength_ = wavelength;
        s.reference_ = reference;
        if (method.kind == PhaseMethodKind::random)
        {
            s.random_airs_ = phases_method2(scene.airs, rng);
            s.random_irs_ = phases_method2(scene.irs, rng);
        }
        return s;
    }

    std::vector<double> PhaseSchedule::phases(Surface surface, double t) const
    {
        const auto &panel = surface == Surface::airs ? scene_.airs : scene_.irs;
        switch (method_.kind)
        {
        case PhaseMethodKind::zero:
            return phases_method1(panel, t);
        case PhaseMethodKind::random:
            return surface == Surface::airs ? random_airs_ : random_irs_;
        case PhaseMethodKind::co_aligned:
            return phases_method3(scene_, surface, t, reference_, method_.target, wavelength_);
        case PhaseMethodKind::quantized:
            return phases_method4(scene_, surface, t, reference_, method_.target, wavelength_, method_.bits);
        }
        throw std::logic_error("Unknown phase method");
    }

    double PhaseSchedule::phase(Surface surface, int unit, double t) const
    {
        const auto &panel = surface == Surface::airs ? scene_.airs : scene_.irs;
        if (unit < 0 || unit >= panel.unit_count())
            throw std::out_of_range("Unit index outside the panel");
        return phases(surface, t)[std::size_t(unit)];
    }
}
