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

#ifndef airs_stats_H
#define airs_stats_H

#include "airs/channel.hpp"
#include "airs/ensemble.hpp"

#include <Eigen/Core>

#include <complex>
#include <span>
#include <vector>

namespace airs::stats
{
    using cplx = std::complex<double>;

    // Position along the Tx and Rx array axes, in wavelengths from the first element.
    // Element p sits at (p - 1) * spacing / lambda.
    struct ArrayPoint
    {
        double tx_wl = 0.0;
        double rx_wl = 0.0;
    };

    struct CorrelationResult
    {
        std::vector<double> axis;
        std::vector<cplx> value;
        std::vector<double> magnitude;
        std::vector<double> std_error; // of the magnitude, delta method
    };

    // Normalized E[h_a*(t) h_b(t + dt)] over the ensemble.
    cplx stcf(const channel::ChannelModel &model, double t, ArrayPoint a, ArrayPoint b, double dt,
              const EnsembleSpec &ensemble);

    // Temporal ACF of the reference pair over the `dt` axis [s].
    CorrelationResult acf(const channel::ChannelModel &model, double t, std::span<const double> dt,
                          const EnsembleSpec &ensemble);

    // Spatial CCF between the reference Rx element and a second one `dq` wavelengths along the Rx axis.
    CorrelationResult ccf(const channel::ChannelModel &model, double t, std::span<const double> dq,
                          const EnsembleSpec &ensemble);

    // Frequency correlation of the reference pair over the `df` axis [Hz]. The reference
    // frequency is averaged over config().frequency_bins points across config().bandwidth_hz.
    CorrelationResult fcf(const channel::ChannelModel &model, double t, std::span<const double> df,
                          const EnsembleSpec &ensemble);

    // log2 det(I + (snr / Q) H H^H) for a P x Q matrix H, evaluated on the smaller Gram matrix.
    double capacity(const Eigen::MatrixXcd &h, double snr);

    // Trapezoidal time average; a single sample is returned as is.
    double time_average(std::span<const double> times, std::span<const double> values);

    struct CapacityCurve
    {
        std::vector<double> snr; // linear
        std::vector<double> mean;
        std::vector<double> std_error;
    };

    CapacityCurve mean_capacity(const channel::ChannelModel &model, std::span<const double> time_grid,
                                std::span<const double> snr, const EnsembleSpec &ensemble);

    // Instantaneous capacity of one realization, averaged over the configured bins when
    // config().capacity_bins > 0. One entry per SNR value.
    std::vector<double> realization_capacity(const channel::ChannelModel &model, const Realization &r, double t,
                                             std::span<const double> snr);
}

#endif
