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

#include "brute_force.hpp"

#include <cmath>
#include <numbers>

namespace oracle
{
    namespace
    {
        constexpr double pi = std::numbers::pi;
        constexpr double c0 = 299792458.0;

        V3 add(V3 a, V3 b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
        V3 sub(V3 a, V3 b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
        V3 scale(V3 a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
        double dot(V3 a, V3 b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
        double len(V3 a) { return std::sqrt(dot(a, a)); }
        V3 cross(V3 a, V3 b)
        {
            return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
        }

        // Rodrigues rotation of v about the unit axis k by angle a.
        V3 rotate(V3 v, V3 k, double a)
        {
            return add(add(scale(v, std::cos(a)), scale(cross(k, v), std::sin(a))),
                       scale(k, dot(k, v) * (1.0 - std::cos(a))));
        }

        // Roll about x first, then yaw about y, then pitch about z, all in the fixed frame.
        V3 orient(V3 v, const airs::geometry::RotationAngles &r)
        {
            v = rotate(v, {1, 0, 0}, r.roll);
            v = rotate(v, {0, 1, 0}, r.yaw);
            return rotate(v, {0, 0, 1}, r.pitch);
        }

        V3 element(V3 first, const airs::geometry::UlaSpec &u, int index)
        {
            const double a = u.azimuth, b = u.elevation;
            const V3 axis{-std::cos(b) * std::cos(a), std::sin(b) * std::sin(a), std::sin(b)};
            return add(first, scale(axis, (index - 1) * u.spacing));
        }

        V3 center(const airs::geometry::SurfacePanel &s, double t)
        {
            const V3 dir{std::sin(s.move_elevation) * std::cos(s.move_azimuth),
                         std::sin(s.move_elevation) * std::sin(s.move_azimuth), std::cos(s.move_elevation)};
            return add({s.anchor.x(), s.anchor.y(), s.anchor.z()}, scale(dir, s.speed * t));
        }

        std::vector<V3> units(const airs::geometry::SurfacePanel &s, V3 c)
        {
            std::vector<V3> out;
            for (int h = 1; h <= s.n_h; ++h)
                for (int v = 1; v <= s.n_v; ++v)
                {
                    const double along_h = (h - 1) * s.unit_w - (s.n_h - 1) * s.unit_w / 2.0;
                    const double along_v = (v - 1) * s.unit_h - (s.n_v - 1) * s.unit_h / 2.0;
                    out.push_back(add(c, orient({along_h, along_v, 0.0}, s.rotation)));
                }
            return out;
        }

        double azimuth_of(V3 v) { return std::atan2(v[1], v[0]); }
        double elevation_of(V3 v) { return std::asin(v[2] / len(v)); }

        double wrap(double x)
        {
            x = std::fmod(x, 2.0 * pi);
            return x < 0.0 ? x + 2.0 * pi : x;
        }

        std::vector<double> surface_phases(const airs::ScenarioConfig &c, const std::vector<V3> &unit_pos,
                                           V3 tx_ref, V3 rx_ref, const std::vector<double> &random)
        {
            const double k = 2.0 * pi * c.carrier_hz / c0;
            std::vector<double> out(unit_pos.size(), 0.0);
            using K = airs::phase::PhaseMethodKind;
            switch (c.method.kind)
            {
            case K::zero:
                break;
            case K::random:
                out = random;
                break;
            case K::co_aligned:
            case K::quantized:
                for (std::size_t n = 0; n < unit_pos.size(); ++n)
                {
                    double phi = wrap(c.method.target + k * (len(sub(unit_pos[n], tx_ref)) + len(sub(rx_ref, unit_pos[n]))));
                    if (c.method.kind == K::quantized)
                    {
                        const double step = 2.0 * pi / std::pow(2.0, c.method.bits);
                        phi = step * (std::floor(phi / step) + 0.5);
                    }
                    out[n] = phi;
                }
                break;
            }
            return out;
        }
    }

    Result evaluate(const airs::ScenarioConfig &c, const airs::fading::ClusterRealization &clusters, int p, int q,
                    double t, const std::vector<double> &random_airs, const std::vector<double> &random_irs)
    {
        const auto &s = c.scene;
        const double k = 2.0 * pi * c.carrier_hz / c0;
        const double k_total = c.k_airs + c.k_irs;

        const V3 tx_ref{0.0, 0.0, s.bs_height};
        const double walked = s.rx_motion.speed * t;
        const V3 rx0{s.distance, 0.0, 0.0};
        const V3 rx_ref{s.distance + walked * std::cos(s.rx_motion.move_azimuth),
                        walked * std::sin(s.rx_motion.move_azimuth), 0.0};

        Result r;
        auto &pos = r.pos;
        pos.tx = element(tx_ref, s.tx, p);
        pos.rx = element(rx_ref, s.rx, q);
        pos.airs_center = center(s.airs, t);
        pos.irs_center = center(s.irs, t);
        pos.airs_units = units(s.airs, pos.airs_center);
        pos.irs_units = units(s.irs, pos.irs_center);

        // Angles from the reference elements to the panel centers.
        const V3 tx_to_airs = sub(pos.airs_center, tx_ref);
        const V3 rx_to_airs = sub(pos.airs_center, rx_ref);
        const V3 rx_to_irs = sub(pos.irs_center, rx_ref);
        auto &a = r.angles;
        a.airs_dep_azimuth = azimuth_of(tx_to_airs);
        a.airs_dep_elevation = elevation_of(tx_to_airs);
        a.airs_arr_azimuth = azimuth_of(rx_to_airs);
        a.airs_arr_elevation = elevation_of(rx_to_airs);
        a.irs_arr_azimuth = azimuth_of(rx_to_irs);
        a.irs_arr_elevation = elevation_of(rx_to_irs);

        // Doppler phases as functions of those angles.
        const double cp = s.airs.move_elevation, ca = s.airs.move_azimuth, cr = s.rx_motion.move_azimuth;
        const double ka = k * s.airs.speed * t, kr = k * walked;
        r.airs_doppler =
            ka * (std::cos(a.airs_dep_elevation) * std::cos(cp) * std::cos(a.airs_dep_azimuth - ca) +
                  std::sin(a.airs_dep_elevation) * std::sin(cp)) -
            ka * (std::cos(a.airs_arr_elevation) * std::cos(cp) * std::cos(a.airs_arr_azimuth - ca) +
                  std::sin(a.airs_arr_elevation) * std::sin(cp)) +
            kr * std::cos(a.airs_arr_azimuth - cr) * std::cos(a.airs_arr_elevation);
        r.irs_doppler = kr * std::cos(a.irs_arr_azimuth - cr) * std::cos(a.irs_arr_elevation);

        // Surface paths.
        r.airs_phases = surface_phases(c, pos.airs_units, tx_ref, rx_ref, random_airs);
        r.irs_phases = surface_phases(c, pos.irs_units, tx_ref, rx_ref, random_irs);
        const auto surface = [&](const std::vector<V3> &u, const std::vector<double> &phi, double kf, double dop,
                                 std::vector<double> &paths) {
            cplx sum = 0.0;
            for (std::size_t n = 0; n < u.size(); ++n)
            {
                paths.push_back(len(sub(u[n], pos.tx)) + len(sub(pos.rx, u[n])));
                sum += std::exp(cplx(0.0, phi[n] - k * paths.back()));
            }
            const bool dropped = c.exclude_irs_path && c.method.kind == airs::phase::PhaseMethodKind::zero;
            if (dropped)
                return cplx(0.0);
            return std::sqrt(kf / (k_total + 1.0) / double(u.size())) * sum * std::exp(cplx(0.0, dop));
        };
        r.airs_gain = surface(pos.airs_units, r.airs_phases, c.k_airs, r.airs_doppler, r.airs_unit_paths);
        r.irs_gain = surface(pos.irs_units, r.irs_phases, c.k_irs, r.irs_doppler, r.irs_unit_paths);
        r.airs_delay = (len(tx_to_airs) + len(rx_to_airs)) / c0;
        r.irs_delay = (len(sub(pos.irs_center, tx_ref)) + len(rx_to_irs)) / c0;

        // Single-bounce clusters around the Rx.
        const double range = clusters.initial_range;
        for (const auto &cl : clusters.clusters)
        {
            cplx sum = 0.0;
            bool first = true;
            for (const auto &ray : cl.rays)
            {
                const V3 toward{-std::cos(ray.elevation) * std::cos(ray.azimuth),
                                -std::cos(ray.elevation) * std::sin(ray.azimuth), std::sin(ray.elevation)};
                const V3 sc = add(rx0, scale(toward, range));
                pos.scatterers.push_back(sc);

                const V3 rx_to_s = sub(sc, rx_ref);
                const double az = azimuth_of(scale(rx_to_s, -1.0));
                const double el = elevation_of(rx_to_s);
                a.ray_azimuth.push_back(az);
                a.ray_elevation.push_back(el);
                const double dop = kr * std::cos(az - cr) * std::cos(el);
                r.ray_doppler.push_back(dop);

                const double d = len(sub(sc, pos.tx)) + len(sub(pos.rx, sc));
                sum += std::exp(cplx(0.0, ray.phase + dop - k * d));
                if (first)
                {
                    r.cluster_delays.push_back((len(sub(sc, tx_ref)) + len(sub(rx_ref, sc))) / c0 + cl.delay);
                    first = false;
                }
            }
            r.cluster_gains.push_back(std::sqrt(1.0 / (k_total + 1.0)) * std::sqrt(cl.power / double(cl.rays.size())) *
                                      sum);
        }
        return r;
    }

    airs::ScenarioConfig random_desk_config(std::mt19937_64 &g)
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::uniform_int_distribution<int> small(1, 3);
        auto c = airs::default_config();
        const double lambda = c.wavelength();
        auto &s = c.scene;
        s.distance = 1.0 + 4.0 * u(g);
        s.bs_height = 0.5 + 1.5 * u(g);
        s.tx = {2, (0.25 + 0.5 * u(g)) * lambda, 2 * pi * u(g) - pi, pi * u(g) - pi / 2};
        s.rx = {2, (0.25 + 0.5 * u(g)) * lambda, 2 * pi * u(g) - pi, pi * u(g) - pi / 2};
        s.rx_motion = {2.0 * u(g), 2 * pi * u(g)};
        for (auto *p : {&s.irs, &s.airs})
        {
            p->n_h = small(g);
            p->n_v = small(g);
            p->unit_w = (0.1 + 0.4 * u(g)) * lambda;
            p->unit_h = (0.1 + 0.4 * u(g)) * lambda;
            p->rotation = {2 * pi * u(g) - pi, 2 * pi * u(g) - pi, 2 * pi * u(g) - pi};
            p->anchor = {6.0 * u(g) - 1.0, 6.0 * u(g) - 3.0, 0.5 + 3.0 * u(g)};
        }
        s.airs.speed = 3.0 * u(g);
        s.airs.move_azimuth = 2 * pi * u(g);
        s.airs.move_elevation = pi * u(g);

        c.k_airs = airs::db_to_linear(-10.0 + 20.0 * u(g));
        c.k_irs = airs::db_to_linear(-10.0 + 20.0 * u(g));
        c.clusters.clusters = 1 + int(2 * u(g));
        c.clusters.rays = 1 + int(4 * u(g));
        c.clusters.initial_range = 0.5 + 2.5 * u(g);
        c.method.kind = airs::phase::PhaseMethodKind(1 + int(4 * u(g)));
        c.method.bits = 1 + int(4 * u(g));
        c.method.target = 2 * pi * u(g);
        return c;
    }
}
