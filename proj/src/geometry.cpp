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

#include "airs/geometry.hpp"
#include "airs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace airs::geometry
{
    namespace
    {
        double checked_norm(const Vec3 &v, const char *what)
        {
            const double n = v.norm();
            if (!(n > 0.0))
                throw geometry_error(std::string("Zero-length link vector: ") + what);
            return n;
        }

        void check_index(int i, int count, const char *what)
        {
            if (i < 1 || i > count)
                throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                                        " outside [1, " + std::to_string(count) + "]");
        }

        Vec3 panel_velocity_direction(const SurfacePanel &panel)
        {
            return {std::sin(panel.move_elevation) * std::cos(panel.move_azimuth),
                    std::sin(panel.move_elevation) * std::sin(panel.move_azimuth),
                    std::cos(panel.move_elevation)};
        }
    }

    double safe_asin(double x)
    {
        constexpr double clip_tol = 1e-12;
        if (!std::isfinite(x) || std::abs(x) > 1.0 + clip_tol)
            throw geometry_error("Elevation argument outside [-1, 1]: " + std::to_string(x));
        return std::asin(std::clamp(x, -1.0, 1.0));
    }

    Mat3 rotation_matrix(const RotationAngles &a)
    {
        const double cp = std::cos(a.pitch), sp = std::sin(a.pitch);
        const double cy = std::cos(a.yaw), sy = std::sin(a.yaw);
        const double cr = std::cos(a.roll), sr = std::sin(a.roll);

        Mat3 rz, ry, rx;
        rz << cp, -sp, 0.0, sp, cp, 0.0, 0.0, 0.0, 1.0;
        ry << cy, 0.0, sy, 0.0, 1.0, 0.0, -sy, 0.0, cy;
        rx << 1.0, 0.0, 0.0, 0.0, cr, -sr, 0.0, sr, cr;
        return rz * ry * rx;
    }

    Vec3 ula_direction(const UlaSpec &spec)
    {
        return {-std::cos(spec.elevation) * std::cos(spec.azimuth),
                std::sin(spec.elevation) * std::sin(spec.azimuth),
                std::sin(spec.elevation)};
    }

    Vec3 ula_offset(int p, const UlaSpec &spec)
    {
        check_index(p, spec.count, "Antenna");
        return double(p - 1) * spec.spacing * ula_direction(spec);
    }

    Vec3 surface_unit_offset(int h, int v, const SurfacePanel &panel)
    {
        check_index(h, panel.n_h, "Horizontal unit");
        check_index(v, panel.n_v, "Vertical unit");
        const double k_h = double(2 * h - panel.n_h - 1) / 2.0;
        const double k_v = double(2 * v - panel.n_v - 1) / 2.0;
        return rotation_matrix(panel.rotation) * Vec3(k_h * panel.unit_w, k_v * panel.unit_h, 0.0);
    }

    std::vector<Vec3> surface_unit_offsets(const SurfacePanel &panel)
    {
        const Mat3 r = rotation_matrix(panel.rotation);
        std::vector<Vec3> out;
        out.reserve(std::size_t(panel.unit_count()));
        for (int h = 1; h <= panel.n_h; ++h)
            for (int v = 1; v <= panel.n_v; ++v)
            {
                const double k_h = double(2 * h - panel.n_h - 1) / 2.0;
                const double k_v = double(2 * v - panel.n_v - 1) / 2.0;
                out.emplace_back(r * Vec3(k_h * panel.unit_w, k_v * panel.unit_h, 0.0));
            }
        return out;
    }

    Vec3 tx_position(const Scene &scene)
    {
        return {0.0, 0.0, scene.bs_height};
    }

    Vec3 rx_position(double t, const Scene &scene)
    {
        const double s = scene.rx_motion.speed * t;
        return {scene.distance + s * std::cos(scene.rx_motion.move_azimuth),
                s * std::sin(scene.rx_motion.move_azimuth), 0.0};
    }

    Vec3 panel_position(double t, const SurfacePanel &panel)
    {
        if (panel.speed == 0.0)
            return panel.anchor;
        return panel.anchor + panel.speed * t * panel_velocity_direction(panel);
    }

    Vec3 airs_position(double t, const SurfacePanel &panel, double bs_height)
    {
        return panel_position(t, panel) - Vec3(0.0, 0.0, bs_height);
    }

    LinkVectors link_vectors(double t, const Scene &scene)
    {
        const Vec3 tx = tx_position(scene);
        const Vec3 rx = rx_position(t, scene);
        const Vec3 airs = panel_position(t, scene.airs);
        const Vec3 irs = panel_position(t, scene.irs);
        return {airs - tx, rx - airs, irs - tx, rx - irs};
    }

    double per_unit_distance(const Vec3 &link, const Vec3 &antenna_offset, const Vec3 &unit_offset)
    {
        const double d = (link + antenna_offset - unit_offset).norm();
        if (!(d > 0.0))
            throw geometry_error("Coincident endpoints in per-unit distance");
        return d;
    }

    std::vector<double> unit_path_lengths(const Scene &scene, Surface surface, double t,
                                          const AntennaPair &antennas)
    {
        const SurfacePanel &panel = surface == Surface::airs ? scene.airs : scene.irs;
        const Vec3 center = panel_position(t, panel);
        const Vec3 to_tx = tx_position(scene) - center;
        const Vec3 to_rx = rx_position(t, scene) - center;

        const auto units = surface_unit_offsets(panel);
        std::vector<double> out(units.size());
        for (std::size_t n = 0; n < units.size(); ++n)
            out[n] = per_unit_distance(to_tx, antennas.tx, units[n]) +
                     per_unit_distance(to_rx, antennas.rx, units[n]);
        return out;
    }

    AirsAngles airs_angles(double t, const Scene &scene)
    {
        const LinkVectors links = link_vectors(t, scene);
        const Vec3 &ta = links.tx_airs;
        const Vec3 &ar = links.airs_rx;
        const double n_ta = checked_norm(ta, "Tx-AIRS");
        const double n_ar = checked_norm(ar, "AIRS-Rx");

        AirsAngles out{};
        out.departure_elevation = safe_asin(ta.z() / n_ta);
        out.arrival_elevation = safe_asin(-ar.z() / n_ar);

        if (scene.convention == AngleConvention::closed_form)
        {
            if (ta.x() == 0.0 && ta.y() == 0.0)
                throw geometry_error("AIRS azimuth undefined above the Tx");
            out.departure_azimuth = std::atan(ta.x() / ta.y());
            out.arrival_azimuth = safe_asin(-ar.y() / (n_ar * std::cos(out.arrival_elevation)));
        }
        else
        {
            out.departure_azimuth = std::atan2(ta.y(), ta.x());
            out.arrival_azimuth = std::atan2(-ar.y(), -ar.x());
        }
        return out;
    }

    IrsAngles irs_arrival_angles(double t, const Scene &scene)
    {
        const Vec3 ir = link_vectors(t, scene).irs_rx;
        const double n_ir = checked_norm(ir, "IRS-Rx");

        IrsAngles out{};
        out.arrival_elevation = safe_asin(-ir.z() / n_ir);
        if (scene.convention == AngleConvention::closed_form)
            out.arrival_azimuth = safe_asin(-ir.y() / (n_ir * std::cos(out.arrival_elevation)));
        else
            out.arrival_azimuth = std::atan2(-ir.y(), -ir.x());
        return out;
    }

    ScattererState scatterer_track(double t, const ScattererInit &init, const MobileSpec &rx,
                                   double distance, double bs_height, AngleConvention convention)
    {
        if (!(init.range > 0.0))
            throw std::invalid_argument("Scatterer range must be positive");

        const double horiz0 = init.range * std::cos(init.elevation);
        const double s = rx.speed * t;
        // Horizontal part of (Rx(t) - S) and height of S above the Rx.
        const Vec3 w(horiz0 * std::cos(init.azimuth) + s * std::cos(rx.move_azimuth),
                     horiz0 * std::sin(init.azimuth) + s * std::sin(rx.move_azimuth),
                     init.range * std::sin(init.elevation));

        ScattererState out{};
        out.range_sr = w.norm();
        out.elevation = safe_asin(w.z() / out.range_sr);

        if (convention == AngleConvention::closed_form)
        {
            out.azimuth = safe_asin(horiz0 * std::sin(init.azimuth) / (out.range_sr * std::cos(out.elevation)));
            const double h = out.range_sr * std::cos(out.elevation);
            const double a = h * std::sin(out.azimuth);
            const double b = distance - h * std::cos(out.azimuth);
            const double c = bs_height - out.range_sr * std::sin(out.elevation);
            out.range_ts = std::sqrt(a * a + b * b + c * c);
        }
        else
        {
            out.azimuth = std::atan2(w.y(), w.x());
            const Vec3 ts(distance - horiz0 * std::cos(init.azimuth), -horiz0 * std::sin(init.azimuth),
                          init.range * std::sin(init.elevation) - bs_height);
            out.range_ts = ts.norm();
        }
        return out;
    }

    Vec3 scatterer_position(const ScattererInit &init, const Scene &scene)
    {
        const double horiz = init.range * std::cos(init.elevation);
        return rx_position(0.0, scene) + Vec3(-horiz * std::cos(init.azimuth), -horiz * std::sin(init.azimuth),
                                              init.range * std::sin(init.elevation));
    }
}
