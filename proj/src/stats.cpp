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

#include "airs/stats.hpp"
#include "airs/errors.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <stdexcept>

namespace airs::stats
{
    using geometry::AntennaPair;
    using geometry::Vec3;

    namespace
    {
        // Per-realization contribution to one correlation point.
        struct Sample
        {
            cplx cross;   // conj(x) y
            double left;  // |x|^2
            double right; // |y|^2
        };

        Sample sample(cplx x, cplx y)
        {
            return {std::conj(x) * y, power(x), power(y)};
        }

        void check_ensemble(const EnsembleSpec &e)
        {
            if (e.realizations == 0)
                throw std::invalid_argument("Ensemble must contain at least one realization");
        }

        // Evaluates `per_realization` for every member (in parallel), then reduces in
        // index order so the result is independent of the worker count.
        template <typename Fn>
        CorrelationResult correlate(std::span<const double> axis, const EnsembleSpec &ens, Fn per_realization)
        {
            check_ensemble(ens);
            const std::size_t n = ens.realizations, k = axis.size();
            std::vector<std::vector<Sample>> samples(n);
            parallel_for(n, ens.workers, [&](std::size_t i) { samples[i] = per_realization(i); });

            CorrelationResult out;
            out.axis.assign(axis.begin(), axis.end());
            out.value.resize(k);
            out.magnitude.resize(k);
            out.std_error.resize(k);

            for (std::size_t j = 0; j < k; ++j)
            {
                CompensatedComplexSum cross;
                CompensatedSum left, right;
                for (std::size_t i = 0; i < n; ++i)
                {
                    cross.add(samples[i][j].cross);
                    left.add(samples[i][j].left);
                    right.add(samples[i][j].right);
                }
                const cplx c = cross.value();
                const double a = left.value(), b = right.value();
                const double norm = std::sqrt(a * b);
                if (!(norm > 0.0))
                    throw numeric_error("Correlation undefined: zero channel power");
                out.value[j] = c / norm;
                out.magnitude[j] = std::abs(c) / norm;

                // Delta-method standard error of |rho| from per-member influence values.
                const double nd = double(n);
                const double mag = out.magnitude[j];
                const double c_abs = std::abs(c);
                if (n < 2 || c_abs == 0.0)
                {
                    out.std_error[j] = 0.0;
                    continue;
                }
                const cplx c_unit = c / c_abs;
                CompensatedSum z_sum, z_sq;
                std::vector<double> z(n);
                for (std::size_t i = 0; i < n; ++i)
                {
                    const auto &s = samples[i][j];
                    z[i] = (std::conj(c_unit) * s.cross).real() * nd / norm -
                           0.5 * mag * (s.left * nd / a + s.right * nd / b);
                    z_sum.add(z[i]);
                }
                const double z_mean = z_sum.value() / nd;
                for (double zi : z)
                    z_sq.add((zi - z_mean) * (zi - z_mean));
                out.std_error[j] = std::sqrt(z_sq.value() / (nd - 1.0)) / std::sqrt(nd);
            }
            return out;
        }

        cplx reference_response(const channel::ChannelModel &model, const Realization &r, double t,
                                 const AntennaPair &ant)
        {
            return channel::frequency_response(model.cir(ant, t, r.field, r.schedule), 0.0);
        }

        AntennaPair array_point(const channel::ChannelModel &model, ArrayPoint p)
        {
            const auto &s = model.config().scene;
            const double lambda = model.wavelength();
            return {p.tx_wl * lambda * geometry::ula_direction(s.tx), p.rx_wl * lambda * geometry::ula_direction(s.rx)};
        }
    }

    cplx stcf(const channel::ChannelModel &model, double t, ArrayPoint a, ArrayPoint b, double dt,
              const EnsembleSpec &ens)
    {
        const AntennaPair ant_a = array_point(model, a), ant_b = array_point(model, b);
        const double axis[1] = {dt};
        auto r = correlate(axis, ens, [&](std::size_t i) {
            const Realization real = draw_realization(model, ens.seed, i);
            return std::vector<Sample>{
                sample(reference_response(model, real, t, ant_a), reference_response(model, real, t + dt, ant_b))};
        });
        return r.value.front();
    }

    CorrelationResult acf(const channel::ChannelModel &model, double t, std::span<const double> dt,
                          const EnsembleSpec &ens)
    {
        const AntennaPair ref{};
        return correlate(dt, ens, [&](std::size_t i) {
            const Realization real = draw_realization(model, ens.seed, i);
            const cplx h0 = reference_response(model, real, t, ref);
            std::vector<Sample> out;
            out.reserve(dt.size());
            for (double d : dt)
                out.push_back(sample(h0, reference_response(model, real, t + d, ref)));
            return out;
        });
    }

    CorrelationResult ccf(const channel::ChannelModel &model, double t, std::span<const double> dq,
                          const EnsembleSpec &ens)
    {
        std::vector<AntennaPair> ants{AntennaPair{}};
        for (double d : dq)
            ants.push_back(array_point(model, {0.0, d}));

        return correlate(dq, ens, [&](std::size_t i) {
            const Realization real = draw_realization(model, ens.seed, i);
            const auto taps = model.cir_batch(ants, t, real.field, real.schedule);
            const cplx h0 = channel::frequency_response(taps.front(), 0.0);
            std::vector<Sample> out;
            out.reserve(dq.size());
            for (std::size_t j = 0; j < dq.size(); ++j)
                out.push_back(sample(h0, channel::frequency_response(taps[j + 1], 0.0)));
            return out;
        });
    }

    CorrelationResult fcf(const channel::ChannelModel &model, double t, std::span<const double> df,
                          const EnsembleSpec &ens)
    {
        const auto &cfg = model.config();
        const auto grid = channel::frequency_grid(cfg.bandwidth_hz, cfg.frequency_bins);
        const AntennaPair ref{};

        return correlate(df, ens, [&](std::size_t i) {
            const Realization real = draw_realization(model, ens.seed, i);
            const auto taps = model.cir(ref, t, real.field, real.schedule);
            const auto h0 = channel::frequency_response(taps, grid);

            std::vector<Sample> out(df.size());
            std::vector<double> shifted(grid.size());
            for (std::size_t j = 0; j < df.size(); ++j)
            {
                for (std::size_t f = 0; f < grid.size(); ++f)
                    shifted[f] = grid[f] + df[j];
                const auto h1 = df[j] == 0.0 ? h0 : channel::frequency_response(taps, shifted);
                CompensatedComplexSum cross;
                CompensatedSum left, right;
                for (std::size_t f = 0; f < grid.size(); ++f)
                {
                    const Sample s = sample(h0[f], h1[f]);
                    cross.add(s.cross);
                    left.add(s.left);
                    right.add(s.right);
                }
                out[j] = {cross.value(), left.value(), right.value()};
            }
            return out;
        });
    }

    double capacity(const Eigen::MatrixXcd &h, double snr)
    {
        if (!(snr >= 0.0) || !std::isfinite(snr))
            throw std::invalid_argument("SNR must be finite and >= 0");
        if (h.size() == 0)
            throw std::invalid_argument("Channel matrix is empty");
        if (!h.allFinite())
            throw numeric_error("Channel matrix contains non-finite entries");

        const double scale = snr / double(h.cols());
        const Eigen::MatrixXcd gram = h.rows() <= h.cols() ? Eigen::MatrixXcd(h * h.adjoint())
                                                           : Eigen::MatrixXcd(h.adjoint() * h);
        const Eigen::Index n = gram.rows();
        const Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n) + scale * gram;

        const Eigen::LLT<Eigen::MatrixXcd> llt(m);
        if (llt.info() != Eigen::Success)
            throw numeric_error("Capacity matrix is not positive definite");

        double log_det = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            log_det += 2.0 * std::log(llt.matrixLLT()(i, i).real());
        return log_det / std::log(2.0);
    }

    double time_average(std::span<const double> times, std::span<const double> values)
    {
        if (times.empty() || times.size() != values.size())
            throw std::invalid_argument("Time average needs matching, non-empty grids");
        if (times.size() == 1)
            return values.front();

        CompensatedSum area;
        for (std::size_t i = 1; i < times.size(); ++i)
        {
            const double step = times[i] - times[i - 1];
            if (!(step > 0.0))
                throw std::invalid_argument("Time grid must be strictly increasing");
            area.add(0.5 * step * (values[i] + values[i - 1]));
        }
        return area.value() / (times.back() - times.front());
    }

    std::vector<double> realization_capacity(const channel::ChannelModel &model, const Realization &r, double t,
                                             std::span<const double> snr)
    {
        const auto &cfg = model.config();
        std::vector<double> out(snr.size(), 0.0);
        if (cfg.capacity_bins == 0)
        {
            const auto h = model.channel_matrix(t, r.field, r.schedule);
            for (std::size_t s = 0; s < snr.size(); ++s)
                out[s] = capacity(h, snr[s]);
            return out;
        }

        const auto bins = channel::frequency_grid(cfg.bandwidth_hz, cfg.capacity_bins);
        const auto hs = model.channel_matrices(t, r.field, r.schedule, bins);
        for (std::size_t s = 0; s < snr.size(); ++s)
        {
            CompensatedSum acc;
            for (const auto &h : hs)
                acc.add(capacity(h, snr[s]));
            out[s] = acc.value() / double(hs.size());
        }
        return out;
    }

    CapacityCurve mean_capacity(const channel::ChannelModel &model, std::span<const double> time_grid,
                                std::span<const double> snr, const EnsembleSpec &ens)
    {
        check_ensemble(ens);
        if (time_grid.empty())
            throw std::invalid_argument("Time grid must not be empty");

        const std::size_t n = ens.realizations, ns = snr.size(), nt = time_grid.size();
        std::vector<std::vector<double>> per_member(n);
        parallel_for(n, ens.workers, [&](std::size_t i) {
            const Realization real = draw_realization(model, ens.seed, i);
            std::vector<std::vector<double>> by_snr(ns, std::vector<double>(nt));
            for (std::size_t k = 0; k < nt; ++k)
            {
                const auto c = realization_capacity(model, real, time_grid[k], snr);
                for (std::size_t s = 0; s < ns; ++s)
                    by_snr[s][k] = c[s];
            }
            per_member[i].resize(ns);
            for (std::size_t s = 0; s < ns; ++s)
                per_member[i][s] = time_average(time_grid, by_snr[s]);
        });

        CapacityCurve out;
        out.snr.assign(snr.begin(), snr.end());
        out.mean.resize(ns);
        out.std_error.resize(ns);
        const double nd = double(n);
        for (std::size_t s = 0; s < ns; ++s)
        {
            CompensatedSum sum;
            for (std::size_t i = 0; i < n; ++i)
                sum.add(per_member[i][s]);
            const double mean = sum.value() / nd;
            CompensatedSum sq;
            for (std::size_t i = 0; i < n; ++i)
                sq.add((per_member[i][s] - mean) * (per_member[i][s] - mean));
            out.mean[s] = mean;
            out.std_error[s] = n > 1 ? std::sqrt(sq.value() / (nd - 1.0) / nd) : 0.0;
        }
        return out;
    }
}
