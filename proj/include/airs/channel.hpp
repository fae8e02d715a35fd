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

#ifndef airs_channel_H
#define airs_channel_H

#include "airs/fading.hpp"
#include "airs/geometry.hpp"
#include "airs/phase_control.hpp"
#include "airs/scenario.hpp"

#include <Eigen/Core>

#include <complex>
#include <span>
#include <vector>

namespace airs::channel
{
    using cplx = std::complex<double>;

    enum class PathClass
    {
        airs,
        irs,
        sbr
    };

    struct PathTap
    {
        PathClass path = PathClass::sbr;
        int cluster = -1; // 0-based cluster index for SBR taps, -1 otherwise
        cplx gain{0.0, 0.0};
        double delay = 0.0; // absolute delay [s]
    };

    // One cluster draw bound to the scene: global scatterer positions, cluster-major.
    struct ScattererField
    {
        fading::ClusterRealization clusters;
        std::vector<geometry::Vec3> positions; // index l * M + m
    };

    // The three exponents of the AIRS Doppler factor [rad], signs as in the CIR:
    // +Tx-side AIRS motion, -Rx-side AIRS motion, +Rx motion.
    struct DopplerPhases
    {
        double tx_side = 0.0;
        double rx_side = 0.0;
        double rx_motion = 0.0;

        double total() const { return tx_side + rx_side + rx_motion; }
    };

    struct PathDelays
    {
        double airs = 0.0;
        double irs = 0.0;
        std::vector<double> clusters;
    };

    // Time-variant channel impulse response of the AIRS + IRS + SBR model.
    //
    // Every tap gain is a unit-free complex amplitude with weights
    //   AIRS: sqrt(K_AIRS / (K + 1)),  IRS: sqrt(K_IRS / (K + 1)),  SBR: sqrt(P_l / (K + 1)),
    // so with random surface phases the ensemble power of the tap set is 1.
    class ChannelModel
    {
    public:
        explicit ChannelModel(ScenarioConfig config);

        const ScenarioConfig &config() const { return config_; }
        double wavelength() const { return wavelength_; }

        // Offsets of Tx element p and Rx element q (1-based).
        geometry::AntennaPair antennas(int p, int q) const;

        ScattererField place_scatterers(const fading::ClusterRealization &realization) const;

        DopplerPhases airs_doppler(double t) const;
        double irs_doppler(double t) const;
        double sbr_doppler(double t, const fading::Ray &ray, double initial_range) const;

        // Analytic time derivatives of the Doppler exponents [rad/s], obtained from the
        // direction vectors (valid for the consistent angle convention).
        DopplerPhases airs_doppler_rate(double t) const;
        double irs_doppler_rate(double t) const;
        double sbr_doppler_rate(double t, const fading::Ray &ray, double initial_range) const;

        PathDelays path_delays(double t, const ScattererField &field) const;

        PathTap h_airs(const geometry::AntennaPair &ant, double t, const phase::PhaseSchedule &schedule) const;
        PathTap h_irs(const geometry::AntennaPair &ant, double t, const phase::PhaseSchedule &schedule) const;
        std::vector<PathTap> h_sbr(const geometry::AntennaPair &ant, double t, const ScattererField &field) const;

        // AIRS tap, IRS tap, then one tap per cluster.
        std::vector<PathTap> cir(const geometry::AntennaPair &ant, double t, const ScattererField &field,
                                 const phase::PhaseSchedule &schedule) const;

        // Same as cir() for several antenna pairs at one instant; per-instant work is shared.
        std::vector<std::vector<PathTap>> cir_batch(std::span<const geometry::AntennaPair> ants, double t,
                                                    const ScattererField &field,
                                                    const phase::PhaseSchedule &schedule) const;

        // P x Q matrix of H_pq(t, f) at baseband offset f (0 gives the tap-gain sum).
        Eigen::MatrixXcd channel_matrix(double t, const ScattererField &field, const phase::PhaseSchedule &schedule,
                                        double frequency_offset = 0.0) const;

        // Matrices at several baseband offsets from a single CIR evaluation.
        std::vector<Eigen::MatrixXcd> channel_matrices(double t, const ScattererField &field,
                                                       const phase::PhaseSchedule &schedule,
                                                       std::span<const double> frequency_offsets) const;

    private:
        struct Instant;
        Instant prepare(double t, const ScattererField *field, const phase::PhaseSchedule *schedule) const;
        PathTap surface_tap(const Instant &in, geometry::Surface surface, const geometry::AntennaPair &ant) const;
        void sbr_taps(const Instant &in, const geometry::AntennaPair &ant, std::vector<PathTap> &out) const;

        ScenarioConfig config_;
        double wavelength_;
        double k0_;
        std::vector<geometry::Vec3> airs_units_;
        std::vector<geometry::Vec3> irs_units_;
    };

    // H(f) = sum of gain * exp(-j 2 pi f delay).
    cplx frequency_response(std::span<const PathTap> taps, double frequency_offset);
    std::vector<cplx> frequency_response(std::span<const PathTap> taps, std::span<const double> frequency_offsets);

    // Baseband offsets of `bins` points spread evenly across `bandwidth` centered at the carrier.
    std::vector<double> frequency_grid(double bandwidth, int bins);
}

#endif
