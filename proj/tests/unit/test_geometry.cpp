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

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/LU>

#include "airs/errors.hpp"
#include "airs/geometry.hpp"
#include "airs/scenario.hpp"
#include "brute_force.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace airs;
using namespace airs::geometry;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    constexpr double pi = std::numbers::pi;

    // Elementwise product of three explicit 3x3 arrays.
    using A33 = double[3][3];
    void mul(const A33 a, const A33 b, A33 out)
    {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
            {
                out[i][j] = 0.0;
                for (int k = 0; k < 3; ++k)
                    out[i][j] += a[i][k] * b[k][j];
            }
    }

    double rel_err(const Vec3 &a, const oracle::V3 &b)
    {
        const double diff = std::hypot(a.x() - b[0], a.y() - b[1], a.z() - b[2]);
        return diff / std::max(std::hypot(b[0], b[1], b[2]), 1e-300);
    }

    Vec3 to_vec(const oracle::V3 &v) { return {v[0], v[1], v[2]}; }

    ScenarioConfig random_scene(std::mt19937_64 &g)
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        auto c = default_config();
        auto &s = c.scene;
        s.distance = 50.0 + 300.0 * u(g);
        s.bs_height = 5.0 + 40.0 * u(g);
        s.tx = {4, (0.2 + 0.8 * u(g)) * c.wavelength(), 2 * pi * u(g) - pi, pi * u(g) - pi / 2};
        s.rx = {4, (0.2 + 0.8 * u(g)) * c.wavelength(), 2 * pi * u(g) - pi, pi * u(g) - pi / 2};
        for (auto *p : {&s.irs, &s.airs})
        {
            p->n_h = 1 + int(10 * u(g));
            p->n_v = 1 + int(10 * u(g));
            p->unit_w = (0.1 + 0.4 * u(g)) * c.wavelength();
            p->unit_h = (0.1 + 0.4 * u(g)) * c.wavelength();
            p->rotation = {2 * pi * u(g) - pi, 2 * pi * u(g) - pi, 2 * pi * u(g) - pi};
            p->anchor = {400 * u(g) - 100, 400 * u(g) - 200, 5 + 60 * u(g)};
        }
        s.airs.speed = 20 * u(g);
        s.airs.move_azimuth = 2 * pi * u(g);
        s.airs.move_elevation = pi * u(g);
        s.rx_motion = {40 * u(g), 2 * pi * u(g)};
        return c;
    }

    fading::ClusterRealization no_clusters()
    {
        return {};
    }
}

TEST_CASE("Geometry - rotation matrix")
{
    const Mat3 id = rotation_matrix({0.0, 0.0, 0.0});
    CHECK((id - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);

    // Independent product of the three elementary rotations.
    const double p = pi / 2, y = pi / 2, r = 0.0;
    const A33 rz = {{std::cos(p), -std::sin(p), 0}, {std::sin(p), std::cos(p), 0}, {0, 0, 1}};
    const A33 ry = {{std::cos(y), 0, std::sin(y)}, {0, 1, 0}, {-std::sin(y), 0, std::cos(y)}};
    const A33 rx = {{1, 0, 0}, {0, std::cos(r), -std::sin(r)}, {0, std::sin(r), std::cos(r)}};
    double tmp[3][3], ref[3][3];
    mul(rz, ry, tmp);
    mul(tmp, rx, ref);
    const Mat3 m = rotation_matrix({p, y, r});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK_THAT(m(i, j), WithinAbs(ref[i][j], 1e-15));

    std::mt19937_64 g(7);
    std::uniform_real_distribution<double> ang(-pi, pi);
    double worst_orth = 0.0, worst_det = 0.0;
    for (int i = 0; i < 10000; ++i)
    {
        const Mat3 q = rotation_matrix({ang(g), ang(g), ang(g)});
        worst_orth = std::max(worst_orth, (q.transpose() * q - Mat3::Identity()).cwiseAbs().maxCoeff());
        worst_det = std::max(worst_det, std::abs(q.determinant() - 1.0));
    }
    CHECK(worst_orth < 1e-12);
    CHECK(worst_det < 1e-12);
}

TEST_CASE("Geometry - ULA offsets")
{
    const double lambda = speed_of_light / 2.4e9;
    UlaSpec u{4, 0.5 * lambda, 0.0, 0.0};
    CHECK(ula_offset(1, u).norm() == 0.0);
    const Vec3 o = ula_offset(2, u);
    CHECK_THAT(o.x(), WithinAbs(-0.5 * lambda, 1e-15));
    CHECK(o.y() == 0.0);
    CHECK(o.z() == 0.0);

    CHECK_THROWS_AS(ula_offset(0, u), std::out_of_range);
    CHECK_THROWS_AS(ula_offset(5, u), std::out_of_range);

    // alpha = pi/5, beta = pi/3, p = 3 against a long double evaluation of the same vector.
    u = {3, 0.5 * lambda, pi / 5, pi / 3};
    const long double a = std::numbers::pi_v<long double> / 5, b = std::numbers::pi_v<long double> / 3;
    const long double d = 2.0L * 0.5L * (299792458.0L / 2.4e9L);
    const long double ref[3] = {-std::cos(b) * std::cos(a) * d, std::sin(b) * std::sin(a) * d, std::sin(b) * d};
    const Vec3 v = ula_offset(3, u);
    for (int i = 0; i < 3; ++i)
        CHECK_THAT(v[i], WithinAbs(double(ref[i]), 1e-15));
}

TEST_CASE("Geometry - surface unit offsets")
{
    SurfacePanel p;
    p.n_h = p.n_v = 2;
    p.unit_w = p.unit_h = 0.1;
    const Vec3 o = surface_unit_offset(1, 1, p);
    CHECK_THAT(o.x(), WithinAbs(-0.05, 1e-16));
    CHECK_THAT(o.y(), WithinAbs(-0.05, 1e-16));
    CHECK(o.z() == 0.0);
    CHECK_THROWS_AS(surface_unit_offset(3, 1, p), std::out_of_range);
    CHECK_THROWS_AS(surface_unit_offset(1, 0, p), std::out_of_range);

    const auto cfg = default_config();
    p = cfg.scene.irs;
    Vec3 sum = Vec3::Zero();
    const double half_diag = 0.5 * std::hypot(p.n_h * p.unit_w, p.n_v * p.unit_h);
    const auto all = surface_unit_offsets(p);
    REQUIRE(all.size() == 100);
    for (const auto &v : all)
    {
        sum += v;
        CHECK(v.norm() <= half_diag);
    }
    CHECK(sum.norm() < 1e-14);

    // Closed under negation: unit (h, v) mirrors (n_h + 1 - h, n_v + 1 - v).
    for (int h = 1; h <= p.n_h; ++h)
        for (int v = 1; v <= p.n_v; ++v)
            CHECK((surface_unit_offset(h, v, p) + surface_unit_offset(p.n_h + 1 - h, p.n_v + 1 - v, p)).norm() <
                  1e-15);

    // Rotated 10 x 10 panel, unit (3, 7): explicit matrix-vector arithmetic.
    const Mat3 r = rotation_matrix(p.rotation);
    const double xh = (2 * 3 - 10 - 1) / 2.0 * p.unit_w, yv = (2 * 7 - 10 - 1) / 2.0 * p.unit_h;
    const Vec3 u37 = surface_unit_offset(3, 7, p);
    for (int i = 0; i < 3; ++i)
        CHECK_THAT(u37[i], WithinAbs(r(i, 0) * xh + r(i, 1) * yv, 1e-15));
    CHECK((all[2 * 10 + 6] - u37).norm() == 0.0);
}

TEST_CASE("Geometry - AIRS trajectory")
{
    const auto cfg = default_config();
    const auto &a = cfg.scene.airs;
    const Vec3 p0 = airs_position(0.0, a, cfg.scene.bs_height);
    CHECK(p0.x() == 75.0);
    CHECK(p0.y() == 75.0);
    CHECK_THAT(p0.z(), WithinAbs(30.0 - 25.0, 1e-15));

    auto still = a;
    still.speed = 0.0;
    CHECK((airs_position(7.0, still, 25.0) - airs_position(0.0, still, 25.0)).norm() == 0.0);

    // Step integration of the constant velocity over 1 s.
    const Vec3 vel = a.speed * Vec3(std::sin(a.move_elevation) * std::cos(a.move_azimuth),
                                    std::sin(a.move_elevation) * std::sin(a.move_azimuth), std::cos(a.move_elevation));
    Vec3 pos = p0;
    const int steps = 1000;
    for (int i = 0; i < steps; ++i)
        pos += vel * (1.0 / steps);
    CHECK((airs_position(1.0, a, 25.0) - pos).norm() < 1e-10);
}

TEST_CASE("Geometry - link vectors")
{
    auto cfg = default_config();
    auto &s = cfg.scene;
    s.rx_motion.speed = 0.0;
    const auto l0 = link_vectors(0.0, s);
    CHECK((l0.irs_rx - Vec3(s.distance - 100.0, -50.0, -10.0)).norm() == 0.0);
    CHECK((link_vectors(10.0, s).tx_irs - l0.tx_irs).norm() == 0.0);

    cfg = default_config();
    const auto r = oracle::evaluate(cfg, no_clusters(), 1, 1, 0.5);
    const auto l = link_vectors(0.5, cfg.scene);
    const Vec3 tx = to_vec(r.pos.tx), rx = to_vec(r.pos.rx);
    CHECK((l.tx_airs - (to_vec(r.pos.airs_center) - tx)).norm() < 1e-12);
    CHECK((l.airs_rx - (rx - to_vec(r.pos.airs_center))).norm() < 1e-12);
    CHECK((l.tx_irs - (to_vec(r.pos.irs_center) - tx)).norm() < 1e-12);
    CHECK((l.irs_rx - (rx - to_vec(r.pos.irs_center))).norm() < 1e-12);
}

TEST_CASE("Geometry - per-unit distance")
{
    const Vec3 link(3.0, -4.0, 12.0), a(0.1, 0.2, -0.3), u(-0.2, 0.05, 0.4);
    CHECK(per_unit_distance(link, Vec3::Zero(), Vec3::Zero()) == 13.0);
    CHECK(per_unit_distance(link, a, u) == per_unit_distance(-link, -a, -u));
    CHECK_THROWS_AS(per_unit_distance(Vec3(1, 2, 3), Vec3::Zero(), Vec3(1, 2, 3)), geometry_error);

    // AIRS unit (1, 1), Rx antenna 2 at the defaults against global coordinates.
    {
        const auto cfg = default_config();
        const auto r = oracle::evaluate(cfg, no_clusters(), 1, 2, 0.0);
        const auto l = link_vectors(0.0, cfg.scene);
        const double d =
            per_unit_distance(l.airs_rx, ula_offset(2, cfg.scene.rx), surface_unit_offset(1, 1, cfg.scene.airs));
        const oracle::V3 diff{r.pos.rx[0] - r.pos.airs_units[0][0], r.pos.rx[1] - r.pos.airs_units[0][1],
                              r.pos.rx[2] - r.pos.airs_units[0][2]};
        CHECK_THAT(d, WithinRel(std::hypot(diff[0], diff[1], diff[2]), 1e-12));
    }

    // Composition rule against the oracle on 10^4 random configurations.
    std::mt19937_64 g(11);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i)
    {
        const auto cfg = random_scene(g);
        const double t = u01(g);
        const int p = 1 + int(4 * u01(g)), q = 1 + int(4 * u01(g));
        const auto r = oracle::evaluate(cfg, no_clusters(), p, q, t);
        const AntennaPair ant{ula_offset(p, cfg.scene.tx), ula_offset(q, cfg.scene.rx)};
        for (auto surface : {Surface::airs, Surface::irs})
        {
            const auto lengths = unit_path_lengths(cfg.scene, surface, t, ant);
            const auto &ref = surface == Surface::airs ? r.airs_unit_paths : r.irs_unit_paths;
            REQUIRE(lengths.size() == ref.size());
            for (std::size_t n = 0; n < ref.size(); ++n)
                worst = std::max(worst, std::abs(lengths[n] - ref[n]) / ref[n]);
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("Geometry - elevation clipping")
{
    CHECK(safe_asin(1.0 + 1e-13) == pi / 2);
    CHECK(safe_asin(-1.0 - 1e-13) == -pi / 2);
    CHECK_THROWS_AS(safe_asin(1.0 + 1e-9), geometry_error);
    CHECK_THROWS_AS(safe_asin(std::nan("")), geometry_error);
}

TEST_CASE("Geometry - AIRS and IRS angles")
{
    auto cfg = default_config();

    // AIRS straight above the Tx: vertical departure.
    {
        auto c = cfg;
        c.scene.airs.anchor = {1e-9, 1e-9, 60.0};
        CHECK_THAT(airs_angles(0.0, c.scene).departure_elevation, WithinAbs(pi / 2, 1e-9));
        c.scene.airs.anchor = {0.0, 0.0, 25.0};
        CHECK_THROWS_AS(airs_angles(0.0, c.scene), geometry_error);
    }

    // Static geometry: constant angles.
    {
        auto c = cfg;
        c.scene.airs.speed = 0.0;
        c.scene.rx_motion.speed = 0.0;
        const auto a0 = airs_angles(0.0, c.scene), a1 = airs_angles(3.0, c.scene);
        CHECK(a0.departure_azimuth == a1.departure_azimuth);
        CHECK(a0.arrival_elevation == a1.arrival_elevation);
        CHECK(irs_arrival_angles(0.0, c.scene).arrival_azimuth == irs_arrival_angles(3.0, c.scene).arrival_azimuth);
    }

    // Ground-level IRS: grazing arrival.
    {
        auto c = cfg;
        c.scene.irs.anchor.z() = 1e-12;
        CHECK_THAT(irs_arrival_angles(0.0, c.scene).arrival_elevation, WithinAbs(0.0, 1e-12));
    }

    // Direction-cosine oracle at the defaults and on random scenes.
    std::mt19937_64 g(5);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i)
    {
        const auto c = i == 0 ? cfg : random_scene(g);
        const double t = i == 0 ? 0.5 : u01(g);
        const auto r = oracle::evaluate(c, no_clusters(), 1, 1, t);
        if (std::abs(r.angles.airs_dep_elevation) > pi / 2 - 1e-3 ||
            std::abs(r.angles.airs_arr_elevation) > pi / 2 - 1e-3 ||
            std::abs(r.angles.irs_arr_elevation) > pi / 2 - 1e-3)
            continue;
        const auto a = airs_angles(t, c.scene);
        const auto b = irs_arrival_angles(t, c.scene);
        worst = std::max({worst, std::abs(a.departure_azimuth - r.angles.airs_dep_azimuth),
                          std::abs(a.departure_elevation - r.angles.airs_dep_elevation),
                          std::abs(a.arrival_azimuth - r.angles.airs_arr_azimuth),
                          std::abs(a.arrival_elevation - r.angles.airs_arr_elevation),
                          std::abs(b.arrival_azimuth - r.angles.irs_arr_azimuth),
                          std::abs(b.arrival_elevation - r.angles.irs_arr_elevation)});
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("Geometry - closed-form angles")
{
    auto cfg = default_config();
    cfg.scene.convention = AngleConvention::closed_form;
    const auto l = link_vectors(0.0, cfg.scene);
    const auto a = airs_angles(0.0, cfg.scene);
    CHECK_THAT(a.departure_azimuth, WithinAbs(std::atan(l.tx_airs.x() / l.tx_airs.y()), 1e-15));
    const double el = std::asin(-l.airs_rx.z() / l.airs_rx.norm());
    CHECK_THAT(a.arrival_azimuth, WithinAbs(std::asin(-l.airs_rx.y() / (l.airs_rx.norm() * std::cos(el))), 1e-12));
}

TEST_CASE("Geometry - scatterer track")
{
    const auto cfg = default_config();
    const auto &s = cfg.scene;
    const ScattererInit init{60.0, pi / 6, pi / 5};

    const auto st0 = scatterer_track(0.0, init, s.rx_motion, s.distance, s.bs_height, s.convention);
    CHECK_THAT(st0.range_sr, WithinRel(60.0, 1e-15));
    CHECK_THAT(st0.azimuth, WithinAbs(init.azimuth, 1e-15));
    CHECK_THAT(st0.elevation, WithinAbs(init.elevation, 1e-15));

    const MobileSpec still{0.0, 0.3};
    const auto a = scatterer_track(0.0, init, still, s.distance, s.bs_height, s.convention);
    const auto b = scatterer_track(4.0, init, still, s.distance, s.bs_height, s.convention);
    CHECK(a.range_sr == b.range_sr);
    CHECK(a.azimuth == b.azimuth);
    CHECK(a.range_ts == b.range_ts);

    // Global frame: scatterer fixed, Rx moved for 1 s.
    fading::ClusterRealization one;
    one.initial_range = init.range;
    one.clusters.push_back({0.0, 1.0, {{init.azimuth, init.elevation, 0.0}}});
    const auto r = oracle::evaluate(cfg, one, 1, 1, 1.0);
    const auto st = scatterer_track(1.0, init, s.rx_motion, s.distance, s.bs_height, s.convention);
    const Vec3 sc = to_vec(r.pos.scatterers[0]);
    const Vec3 rx = rx_position(1.0, s);
    CHECK_THAT(st.range_sr, WithinRel((sc - rx).norm(), 1e-12));
    CHECK_THAT(st.range_ts, WithinRel((sc - tx_position(s)).norm(), 1e-12));
    CHECK_THAT(st.azimuth, WithinAbs(r.angles.ray_azimuth[0], 1e-12));
    CHECK_THAT(st.elevation, WithinAbs(r.angles.ray_elevation[0], 1e-12));
    CHECK(rel_err(scatterer_position(init, s), r.pos.scatterers[0]) < 1e-15);

    // Re-basing at t1 and advancing by t2 reproduces the direct track.
    const double t1 = 0.7, t2 = 1.3;
    const auto mid = scatterer_track(t1, init, s.rx_motion, s.distance, s.bs_height, s.convention);
    const auto rebased =
        scatterer_track(t2, {mid.range_sr, mid.azimuth, mid.elevation}, s.rx_motion, s.distance, s.bs_height,
                        s.convention);
    const auto direct = scatterer_track(t1 + t2, init, s.rx_motion, s.distance, s.bs_height, s.convention);
    CHECK(std::abs(rebased.range_sr - direct.range_sr) < 1e-6);
    CHECK_THAT(rebased.azimuth, WithinAbs(direct.azimuth, 1e-9));
    CHECK_THAT(rebased.elevation, WithinAbs(direct.elevation, 1e-9));

    CHECK_THROWS_AS(scatterer_track(0.0, {0.0, 0.1, 0.1}, s.rx_motion, s.distance, s.bs_height, s.convention),
                    std::invalid_argument);
}
