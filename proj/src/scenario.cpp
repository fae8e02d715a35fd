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

#include "airs/scenario.hpp"
#include "airs/errors.hpp"

#include <cmath>
#include <numbers>

namespace airs
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        void require(bool ok, const char *key, const char *what)
        {
            if (!ok)
                throw config_error(key, what);
        }

        bool finite_all(std::initializer_list<double> xs)
        {
            for (double x : xs)
                if (!std::isfinite(x))
                    return false;
            return true;
        }

        void check_rotation(const geometry::RotationAngles &r, const char *key)
        {
            require(finite_all({r.pitch, r.yaw, r.roll}) && std::abs(r.pitch) <= pi && std::abs(r.yaw) <= pi &&
                        std::abs(r.roll) <= pi,
                    key, "rotation angles must lie in [-pi, pi]");
        }

        void check_panel(const geometry::SurfacePanel &p, double lambda, const std::string &name,
                         std::vector<std::string> &warnings)
        {
            const std::string units_h = name + ".units_h", units_v = name + ".units_v";
            require(p.n_h >= 1, units_h.c_str(), "must be >= 1");
            require(p.n_v >= 1, units_v.c_str(), "must be >= 1");
            const std::string uw = name + ".unit_width_wl", uh = name + ".unit_height_wl";
            require(p.unit_w > 0.0 && std::isfinite(p.unit_w), uw.c_str(), "must be > 0");
            require(p.unit_h > 0.0 && std::isfinite(p.unit_h), uh.c_str(), "must be > 0");
            const std::string rot = name + ".rotation";
            check_rotation(p.rotation, rot.c_str());
            const std::string pos = name + ".position_m";
            require(finite_all({p.anchor.x(), p.anchor.y(), p.anchor.z()}), pos.c_str(), "must be finite");
            const std::string spd = name + ".speed_mps";
            require(p.speed >= 0.0 && std::isfinite(p.speed), spd.c_str(), "must be >= 0");

            constexpr double slack = 1e-9;
            for (double s : {p.unit_w, p.unit_h})
                if (s < lambda / 10.0 * (1.0 - slack) || s > lambda / 2.0 * (1.0 + slack))
                {
                    warnings.push_back(name + ": unit size " + std::to_string(s / lambda) +
                                       " wavelengths outside [0.1, 0.5]");
                    break;
                }
        }
    }

    double db_to_linear(double db)
    {
        return std::pow(10.0, db / 10.0);
    }

    ScenarioConfig default_config()
    {
        ScenarioConfig c;
        const double lambda = c.wavelength();

        c.k_airs = 1.0;
        c.k_irs = 1.0;

        auto &s = c.scene;
        s.distance = 200.0;
        s.bs_height = 25.0;
        s.tx = {2, 0.5 * lambda, pi / 5.0, pi / 3.0};
        s.rx = {2, 0.5 * lambda, pi / 3.0, pi / 12.0};
        s.rx_motion = {30.0, pi / 6.0};

        s.irs.n_h = s.irs.n_v = 10;
        s.irs.unit_w = s.irs.unit_h = 0.5 * lambda;
        s.irs.rotation = {pi / 2.0, pi / 2.0, pi / 6.0};
        s.irs.anchor = {100.0, 50.0, 10.0};

        s.airs.n_h = s.airs.n_v = 10;
        s.airs.unit_w = s.airs.unit_h = 0.5 * lambda;
        s.airs.rotation = {0.0, pi / 2.0, pi / 2.0};
        s.airs.anchor = {75.0, 75.0, 30.0};
        s.airs.speed = 5.0;
        s.airs.move_azimuth = pi / 10.0;
        s.airs.move_elevation = pi / 10.0;

        auto &cl = c.clusters;
        cl.clusters = 16;
        cl.rays = 20;
        cl.delay_scaling = 2.3;
        cl.delay_spread = 363e-9;
        cl.shadowing_db = 4.0;
        cl.angles = {pi / 6.0, pi / 18.0, pi / 12.0, pi / 3.0};
        cl.initial_range = 60.0;

        c.method = {phase::PhaseMethodKind::co_aligned, 2, 0.0};
        return c;
    }

    std::vector<std::string> validate(const ScenarioConfig &c)
    {
        std::vector<std::string> warnings;

        require(c.carrier_hz > 0.0 && std::isfinite(c.carrier_hz), "general.carrier_hz", "must be > 0");
        require(c.k_airs >= 0.0 && std::isfinite(c.k_airs), "general.k_airs_db", "must be finite");
        require(c.k_irs >= 0.0 && std::isfinite(c.k_irs), "general.k_irs_db", "must be finite");

        const auto &s = c.scene;
        require(s.distance > 0.0 && std::isfinite(s.distance), "general.distance_m", "must be > 0");
        require(s.bs_height >= 0.0 && std::isfinite(s.bs_height), "general.bs_height_m", "must be >= 0");

        require(s.tx.count >= 1, "tx.antennas", "must be >= 1");
        require(s.tx.spacing > 0.0 && std::isfinite(s.tx.spacing), "tx.spacing_wl", "must be > 0");
        require(finite_all({s.tx.azimuth, s.tx.elevation}), "tx.azimuth", "must be finite");
        require(s.rx.count >= 1, "rx.antennas", "must be >= 1");
        require(s.rx.spacing > 0.0 && std::isfinite(s.rx.spacing), "rx.spacing_wl", "must be > 0");
        require(finite_all({s.rx.azimuth, s.rx.elevation}), "rx.azimuth", "must be finite");
        require(s.rx_motion.speed >= 0.0 && std::isfinite(s.rx_motion.speed), "rx.speed_mps", "must be >= 0");
        require(std::isfinite(s.rx_motion.move_azimuth), "rx.move_azimuth", "must be finite");

        const double lambda = c.wavelength();
        check_panel(s.irs, lambda, "irs", warnings);
        check_panel(s.airs, lambda, "airs", warnings);
        require(s.irs.speed == 0.0, "irs.speed_mps", "the terrestrial IRS is static");

        const auto &cl = c.clusters;
        require(cl.clusters >= 1, "clusters.count", "must be >= 1");
        require(cl.rays >= 1, "clusters.rays", "must be >= 1");
        require(cl.delay_scaling > 1.0, "clusters.delay_scaling", "must be > 1");
        require(cl.delay_spread > 0.0, "clusters.delay_spread_s", "must be > 0");
        require(cl.shadowing_db >= 0.0, "clusters.shadowing_db", "must be >= 0");
        require(cl.angles.sigma > 0.0, "clusters.angle_sigma", "must be > 0");
        require(cl.angles.low < cl.angles.up, "clusters.angle_low", "must be below clusters.angle_up");
        require(cl.initial_range > 0.0, "clusters.initial_range_m", "must be > 0");

        const int kind = int(c.method.kind);
        require(kind >= 1 && kind <= 4, "phase.method", "must be 1, 2, 3 or 4");
        require(c.method.bits >= 1 && c.method.bits <= 30, "phase.bits", "must be in [1, 30]");
        require(c.method.target >= 0.0 && c.method.target < 2.0 * pi, "phase.target", "must lie in [0, 2 pi)");

        require(c.bandwidth_hz > 0.0 && std::isfinite(c.bandwidth_hz), "analysis.bandwidth_hz", "must be > 0");
        require(c.frequency_bins >= 2, "analysis.frequency_bins", "must be >= 2");
        require(c.capacity_bins >= 0, "analysis.capacity_bins", "must be >= 0");
        return warnings;
    }
}
