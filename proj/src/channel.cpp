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

#include "airs/channel.hpp"
#include "airs/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace airs::channel
{
    using geometry::AntennaPair;
    using geometry::Surface;
    using geometry::Vec3;

    namespace
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;

        Vec3 airs_motion_direction(const geometry::SurfacePanel &p)
        {
            return {std::sin(p.move_elevation) * std::cos(p.move_azimuth),
                    std::sin(p.move_elevation) * std::sin(p.move_azimuth), std::cos(p.move_elevation)};
        }

        // Direction used in the Doppler projection of the AIRS motion.
        Vec3 airs_doppler_axis(const geometry::SurfacePanel &p)
        {
            return {std::cos(p.move_elevation) * std::cos(p.move_azimuth),
                    std::cos(p.move_elevation) * std::sin(p.move_azimuth), std::sin(p.move_elevation)};
        }

        Vec3 rx_motion_axis(const geometry::MobileSpec &m)
        {
            return {std::cos(m.move_azimuth), std::sin(m.move_azimuth), 0.0};
        }

        // d/dt of v / |v| given dv/dt.
        Vec3 unit_vector_rate(const Vec3 &v, const Vec3 &v_dot)
        {
            const double n = v.norm();
            const Vec3 e = v / n;
            return (v_dot - v_dot.dot(e) * e) / n;
        }
    }

    struct ChannelModel::Instant
    {
        double t = 0.0;
        Vec3 tx, rx, airs_center, irs_center;
        std::vector<double> airs_phase, irs_phase;
        cplx airs_doppler{1.0, 0.0}, irs_doppler{1.0, 0.0};
        double airs_delay = 0.0, irs_delay = 0.0;
        const ScattererField *field = nullptr;
        std::vector<cplx> ray_factor; // exp(j (phi_lm + Doppler_lm(t)))
        std::vector<double> cluster_delay;
    };

    ChannelModel::ChannelModel(ScenarioConfig config) : config_(std::move(config))
    {
        validate(config_);
        wavelength_ = config_.wavelength();
        k0_ = two_pi / wavelength_;
        airs_units_ = geometry::surface_unit_offsets(config_.scene.airs);
        irs_units_ = geometry::surface_unit_offsets(config_.scene.irs);
    }

    AntennaPair ChannelModel::antennas(int p, int q) const
    {
        return {geometry::ula_offset(p, config_.scene.tx), geometry::ula_offset(q, config_.scene.rx)};
    }

    ScattererField ChannelModel::place_scatterers(const fading::ClusterRealization &realization) const
    {
        ScattererField f;
        f.clusters = realization;
        for (const auto &c : realization.clusters)
            for (const auto &r : c.rays)
                f.positions.push_back(
                    geometry::scatterer_position({realization.initial_range, r.azimuth, r.elevation}, config_.scene));
        return f;
    }

    DopplerPhases ChannelModel::airs_doppler(double t) const
    {
        const auto &s = config_.scene;
        const auto a = geometry::airs_angles(t, s);
        const double chi_par = s.airs.move_azimuth, chi_perp = s.airs.move_elevation;
        const double ka = k0_ * s.airs.speed * t;
        const double kr = k0_ * s.rx_motion.speed * t;

        DopplerPhases d;
        d.tx_side = ka * (std::cos(a.departure_elevation) * std::cos(chi_perp) *
                              std::cos(a.departure_azimuth - chi_par) +
                          std::sin(a.departure_elevation) * std::sin(chi_perp));
        d.rx_side = -ka * (std::cos(a.arrival_elevation) * std::cos(chi_perp) * std::cos(a.arrival_azimuth - chi_par) +
                           std::sin(a.arrival_elevation) * std::sin(chi_perp));
        d.rx_motion = kr * std::cos(a.arrival_azimuth - s.rx_motion.move_azimuth) * std::cos(a.arrival_elevation);
        return d;
    }

    double ChannelModel::irs_doppler(double t) const
    {
        const auto &s = config_.scene;
        const auto a = geometry::irs_arrival_angles(t, s);
        return k0_ * s.rx_motion.speed * t * std::cos(a.arrival_azimuth - s.rx_motion.move_azimuth) *
               std::cos(a.arrival_elevation);
    }

    double ChannelModel::sbr_doppler(double t, const fading::Ray &ray, double initial_range) const
    {
        const auto &s = config_.scene;
        const auto st = geometry::scatterer_track(t, {initial_range, ray.azimuth, ray.elevation}, s.rx_motion,
                                                  s.distance, s.bs_height, s.convention);
        return k0_ * s.rx_motion.speed * t * std::cos(st.azimuth - s.rx_motion.move_azimuth) * std::cos(st.elevation);
    }

    DopplerPhases ChannelModel::airs_doppler_rate(double t) const
    {
        const auto &s = config_.scene;
        const auto links = geometry::link_vectors(t, s);
        const Vec3 m_a = airs_motion_direction(s.airs);
        const Vec3 w = airs_doppler_axis(s.airs);
        const Vec3 u_r = rx_motion_axis(s.rx_motion);
        const double va = s.airs.speed, vr = s.rx_motion.speed;

        const Vec3 ta_dot = va * m_a;
        const Vec3 d1 = links.tx_airs.normalized();
        const Vec3 d1_dot = unit_vector_rate(links.tx_airs, ta_dot);

        // Direction Rx -> AIRS is -eps^{A,R}/|eps^{A,R}|.
        const Vec3 ar_dot = vr * u_r - va * m_a;
        const Vec3 d2 = -links.airs_rx.normalized();
        const Vec3 d2_dot = -unit_vector_rate(links.airs_rx, ar_dot);

        DopplerPhases r;
        r.tx_side = k0_ * va * (d1.dot(w) + t * d1_dot.dot(w));
        r.rx_side = -k0_ * va * (d2.dot(w) + t * d2_dot.dot(w));
        r.rx_motion = k0_ * vr * (d2.dot(u_r) + t * d2_dot.dot(u_r));
        return r;
    }

    double ChannelModel::irs_doppler_rate(double t) const
    {
        const auto &s = config_.scene;
        const Vec3 ir = geometry::link_vectors(t, s).irs_rx;
        const Vec3 u_r = rx_motion_axis(s.rx_motion);
        const double vr = s.rx_motion.speed;
        const Vec3 d = -ir.normalized();
        const Vec3 d_dot = -unit_vector_rate(ir, vr * u_r);
        return k0_ * vr * (d.dot(u_r) + t * d_dot.dot(u_r));
    }

    double ChannelModel::sbr_doppler_rate(double t, const fading::Ray &ray, double initial_range) const
    {
        const auto &m = config_.scene.rx_motion;
        const Vec3 u_r = rx_motion_axis(m);
        const double horiz0 = initial_range * std::cos(ray.elevation);
        // Horizontal part of Rx(t) - S, height of S above the Rx; only the first part moves.
        const Vec3 w = Vec3(horiz0 * std::cos(ray.azimuth), horiz0 * std::sin(ray.azimuth),
                            initial_range * std::sin(ray.elevation)) +
                       m.speed * t * u_r;
        const Vec3 w_dot = m.speed * u_r;
        return k0_ * m.speed * (w.normalized().dot(u_r) + t * unit_vector_rate(w, w_dot).dot(u_r));
    }

    PathDelays ChannelModel::path_delays(double t, const ScattererField &field) const
    {
        const auto &s = config_.scene;
        const auto links = geometry::link_vectors(t, s);
        PathDelays d;
        d.airs = (links.tx_airs.norm() + links.airs_rx.norm()) / speed_of_light;
        d.irs = (links.tx_irs.norm() + links.irs_rx.norm()) / speed_of_light;

        const Vec3 tx = geometry::tx_position(s);
        const Vec3 rx = geometry::rx_position(t, s);
        std::size_t offset = 0;
        for (const auto &c : field.clusters.clusters)
        {
            const Vec3 &first = field.positions.at(offset);
            d.clusters.push_back(((first - tx).norm() + (rx - first).norm()) / speed_of_light + c.delay);
            offset += c.rays.size();
        }
        return d;
    }

    ChannelModel::Instant ChannelModel::prepare(double t, const ScattererField *field,
                                                const phase::PhaseSchedule *schedule) const
    {
        const auto &s = config_.scene;
        Instant in;
        in.t = t;
        in.tx = geometry::tx_position(s);
        in.rx = geometry::rx_position(t, s);
        in.airs_center = geometry::panel_position(t, s.airs);
        in.irs_center = geometry::panel_position(t, s.irs);

        if (schedule)
        {
            in.airs_phase = schedule->phases(Surface::airs, t);
            in.irs_phase = schedule->phases(Surface::irs, t);
            in.airs_doppler = std::polar(1.0, airs_doppler(t).total());
            in.irs_doppler = std::polar(1.0, irs_doppler(t));
            const auto links = geometry::link_vectors(t, s);
            in.airs_delay = (links.tx_airs.norm() + links.airs_rx.norm()) / speed_of_light;
            in.irs_delay = (links.tx_irs.norm() + links.irs_rx.norm()) / speed_of_light;
        }

        if (field)
        {
            in.field = field;
            const double range = field->clusters.initial_range;
            for (const auto &c : field->clusters.clusters)
                for (const auto &r : c.rays)
                    in.ray_factor.push_back(std::polar(1.0, r.phase + sbr_doppler(t, r, range)));
            in.cluster_delay = path_delays(t, *field).clusters;
        }
        return in;
    }

    PathTap ChannelModel::surface_tap(const Instant &in, Surface surface, const AntennaPair &ant) const
    {
        const bool is_airs = surface == Surface::airs;
        const auto &units = is_airs ? airs_units_ : irs_units_;
        const auto &phases = is_airs ? in.airs_phase : in.irs_phase;
        const Vec3 &center = is_airs ? in.airs_center : in.irs_center;

        PathTap tap;
        tap.path = is_airs ? PathClass::airs : PathClass::irs;
        tap.delay = is_airs ? in.airs_delay : in.irs_delay;

        const double k = is_airs ? config_.k_airs : config_.k_irs;
        const bool dropped = config_.exclude_irs_path && config_.method.kind == phase::PhaseMethodKind::zero;
        if (k == 0.0 || dropped)
            return tap;

        const Vec3 to_tx = in.tx - center;
        const Vec3 to_rx = in.rx - center;
        cplx sum{0.0, 0.0};
        for (std::size_t n = 0; n < units.size(); ++n)
        {
            const double d = geometry::per_unit_distance(to_tx, ant.tx, units[n]) +
                             geometry::per_unit_distance(to_rx, ant.rx, units[n]);
            sum += std::polar(1.0, phases[n] - k0_ * d);
        }

        const double weight = std::sqrt(k / (config_.k_rice() + 1.0)) / std::sqrt(double(units.size()));
        tap.gain = weight * sum * (is_airs ? in.airs_doppler : in.irs_doppler);
        return tap;
    }

    void ChannelModel::sbr_taps(const Instant &in, const AntennaPair &ant, std::vector<PathTap> &out) const
    {
        const auto &clusters = in.field->clusters.clusters;
        const auto &pos = in.field->positions;
        const Vec3 tx = in.tx + ant.tx;
        const Vec3 rx = in.rx + ant.rx;
        const double base = std::sqrt(1.0 / (config_.k_rice() + 1.0));

        std::size_t idx = 0;
        for (std::size_t l = 0; l < clusters.size(); ++l)
        {
            const auto &c = clusters[l];
            cplx sum{0.0, 0.0};
            for (std::size_t m = 0; m < c.rays.size(); ++m, ++idx)
            {
                const double d = (pos[idx] - tx).norm() + (rx - pos[idx]).norm();
                sum += in.ray_factor[idx] * std::polar(1.0, -k0_ * d);
            }
            PathTap tap;
            tap.path = PathClass::sbr;
            tap.cluster = int(l);
            tap.delay = in.cluster_delay[l];
            tap.gain = base * std::sqrt(c.power / double(c.rays.size())) * sum;
            out.push_back(tap);
        }
    }

    PathTap ChannelModel::h_airs(const AntennaPair &ant, double t, const phase::PhaseSchedule &schedule) const
    {
        return surface_tap(prepare(t, nullptr, &schedule), Surface::airs, ant);
    }

    PathTap ChannelModel::h_irs(const AntennaPair &ant, double t, const phase::PhaseSchedule &schedule) const
    {
        return surface_tap(prepare(t, nullptr, &schedule), Surface::irs, ant);
    }

    std::vector<PathTap> ChannelModel::h_sbr(const AntennaPair &ant, double t, const ScattererField &field) const
    {
        std::vector<PathTap> out;
        sbr_taps(prepare(t, &field, nullptr), ant, out);
        return out;
    }

    std::vector<PathTap> ChannelModel::cir(const AntennaPair &ant, double t, const ScattererField &field,
                                           const phase::PhaseSchedule &schedule) const
    {
        return std::move(cir_batch(std::span(&ant, 1), t, field, schedule).front());
    }

    std::vector<std::vector<PathTap>> ChannelModel::cir_batch(std::span<const AntennaPair> ants, double t,
                                                              const ScattererField &field,
                                                              const phase::PhaseSchedule &schedule) const
    {
        const Instant in = prepare(t, &field, &schedule);
        std::vector<std::vector<PathTap>> out(ants.size());
        for (std::size_t i = 0; i < ants.size(); ++i)
        {
            auto &taps = out[i];
            taps.reserve(2 + field.clusters.clusters.size());
            taps.push_back(surface_tap(in, Surface::airs, ants[i]));
            taps.push_back(surface_tap(in, Surface::irs, ants[i]));
            sbr_taps(in, ants[i], taps);
        }
        return out;
    }

    Eigen::MatrixXcd ChannelModel::channel_matrix(double t, const ScattererField &field,
                                                  const phase::PhaseSchedule &schedule, double frequency_offset) const
    {
        return std::move(channel_matrices(t, field, schedule, std::span(&frequency_offset, 1)).front());
    }

    std::vector<Eigen::MatrixXcd> ChannelModel::channel_matrices(double t, const ScattererField &field,
                                                                 const phase::PhaseSchedule &schedule,
                                                                 std::span<const double> freqs) const
    {
        const int P = config_.scene.tx.count, Q = config_.scene.rx.count;
        std::vector<AntennaPair> ants;
        ants.reserve(std::size_t(P * Q));
        for (int p = 1; p <= P; ++p)
            for (int q = 1; q <= Q; ++q)
                ants.push_back(antennas(p, q));

        const auto taps = cir_batch(ants, t, field, schedule);
        std::vector<Eigen::MatrixXcd> out(freqs.size(), Eigen::MatrixXcd(P, Q));
        for (int p = 0; p < P; ++p)
            for (int q = 0; q < Q; ++q)
            {
                const auto &pq = taps[std::size_t(p * Q + q)];
                for (std::size_t f = 0; f < freqs.size(); ++f)
                {
                    const cplx h = frequency_response(pq, freqs[f]);
                    if (!std::isfinite(h.real()) || !std::isfinite(h.imag()))
                        throw numeric_error("Non-finite channel coefficient at t = " + std::to_string(t));
                    out[f](p, q) = h;
                }
            }
        return out;
    }

    cplx frequency_response(std::span<const PathTap> taps, double f)
    {
        cplx h{0.0, 0.0};
        if (f == 0.0)
        {
            for (const auto &tap : taps)
                h += tap.gain;
            return h;
        }
        for (const auto &tap : taps)
            h += tap.gain * std::polar(1.0, -two_pi * f * tap.delay);
        return h;
    }

    std::vector<cplx> frequency_response(std::span<const PathTap> taps, std::span<const double> freqs)
    {
        std::vector<cplx> out;
        out.reserve(freqs.size());
        for (double f : freqs)
            out.push_back(frequency_response(taps, f));
        return out;
    }

    std::vector<double> frequency_grid(double bandwidth, int bins)
    {
        if (bins < 1 || !(bandwidth > 0.0))
            throw std::invalid_argument("Frequency grid needs bins >= 1 and bandwidth > 0");
        std::vector<double> out(static_cast<std::size_t>(bins));
        for (int i = 0; i < bins; ++i)
            out[std::size_t(i)] = -bandwidth / 2.0 + (double(i) + 0.5) * bandwidth / double(bins);
        return out;
    }
}
