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

#include "airs/presets.hpp"
#include "airs/channel.hpp"
#include "airs/config_io.hpp"
#include "airs/stats.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace airs
{
    namespace
    {
        using phase::PhaseMethodKind;

        struct Curve
        {
            std::string label;
            ScenarioConfig config;
        };

        ScenarioConfig with_method(ScenarioConfig c, PhaseMethodKind kind, int bits = 2)
        {
            c.method.kind = kind;
            c.method.bits = bits;
            return c;
        }

        std::vector<Curve> four_methods(const ScenarioConfig &base, int bits)
        {
            return {{"method1", with_method(base, PhaseMethodKind::zero)},
                    {"method2", with_method(base, PhaseMethodKind::random)},
                    {"method3", with_method(base, PhaseMethodKind::co_aligned)},
                    {"method4", with_method(base, PhaseMethodKind::quantized, bits)}};
        }

        std::vector<double> linspace(double lo, double hi, int n)
        {
            std::vector<double> v(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                v[std::size_t(i)] = n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
            return v;
        }

        std::string fmt(double v)
        {
            return format_value(v);
        }

        struct Context
        {
            const ScenarioConfig &base;
            const PresetOptions &options;
            std::string preset;

            std::size_t realizations(std::size_t fallback) const
            {
                return options.realizations.value_or(fallback);
            }

            stats::EnsembleSpec ensemble(std::size_t fallback) const
            {
                return {realizations(fallback), options.seed, options.workers};
            }

            void note(const std::string &what) const
            {
                if (options.progress)
                    options.progress(what);
            }

            ResultTable table(const std::string &name, std::size_t fallback) const
            {
                ResultTable t;
                t.name = name;
                t.set_meta("tool_version", tool_version);
                t.set_meta("preset", preset);
                t.set_meta("seed", std::to_string(options.seed));
                t.set_meta("realizations", std::to_string(realizations(fallback)));
                t.set_meta("config_hash", config_hash(base));
                return t;
            }
        };

        void describe(ResultTable &t, const std::vector<Curve> &curves)
        {
            std::ostringstream o;
            for (std::size_t i = 0; i < curves.size(); ++i)
            {
                const auto &c = curves[i].config;
                o << (i ? "; " : "") << curves[i].label << "=method " << int(c.method.kind);
                if (c.method.kind == PhaseMethodKind::quantized)
                    o << " (" << c.method.bits << " bits)";
            }
            t.set_meta("curves", o.str());
            t.set_meta("error_bars", "<curve>_err3 columns hold 3 standard errors of the magnitude");
        }

        using Estimator = stats::CorrelationResult (*)(const channel::ChannelModel &, double, std::span<const double>,
                                                       const stats::EnsembleSpec &);

        // One magnitude column and one 3-SE column per curve over a shared axis.
        void correlation_table(ResultTable &t, const Context &ctx, const std::string &axis_name,
                               const std::vector<double> &axis, const std::vector<Curve> &curves, double time,
                               Estimator estimator)
        {
            t.columns = {axis_name};
            std::vector<stats::CorrelationResult> results;
            for (const auto &curve : curves)
            {
                ctx.note(t.name + ": " + curve.label);
                const channel::ChannelModel model(curve.config);
                results.push_back(estimator(model, time, axis, ctx.ensemble(default_correlation_realizations)));
                t.columns.push_back(curve.label);
                t.columns.push_back(curve.label + "_err3");
            }
            for (std::size_t i = 0; i < axis.size(); ++i)
            {
                std::vector<double> row{axis[i]};
                for (const auto &r : results)
                {
                    row.push_back(r.magnitude[i]);
                    row.push_back(3.0 * r.std_error[i]);
                }
                t.add_row(std::move(row));
            }
            describe(t, curves);
        }

        std::vector<ResultTable> acf_fig3(const Context &ctx)
        {
            std::vector<ResultTable> out;
            const auto dt = linspace(0.0, 10e-3, 41);
            for (int units : {10, 20})
            {
                ScenarioConfig c = ctx.base;
                c.scene.irs.n_h = c.scene.irs.n_v = c.scene.airs.n_h = c.scene.airs.n_v = units;
                auto t = ctx.table("acf_fig3_units" + std::to_string(units), default_correlation_realizations);
                t.set_meta("t_s", "0");
                t.set_meta("panel_units", std::to_string(units) + "x" + std::to_string(units) + " on both surfaces");
                t.set_meta("axis", "dt_s in [0, 0.01] s, 41 points (artifact choice)");
                correlation_table(t, ctx, "dt_s", dt, four_methods(c, 4), 0.0, &stats::acf);
                out.push_back(std::move(t));
            }
            return out;
        }

        std::vector<ResultTable> ccf_fig4(const Context &ctx)
        {
            std::vector<ResultTable> out;
            const auto dq = linspace(0.0, 5.0, 21);
            const double lambda = ctx.base.wavelength();
            const std::pair<const char *, double> sizes[] = {{"half_wl", 0.5}, {"quarter_wl", 0.25}};
            for (const auto &[tag, size] : sizes)
            {
                ScenarioConfig c = ctx.base;
                for (auto *p : {&c.scene.irs, &c.scene.airs})
                    p->unit_w = p->unit_h = size * lambda;
                auto t = ctx.table(std::string("ccf_fig4_") + tag, default_correlation_realizations);
                t.set_meta("t_s", "0.5");
                t.set_meta("unit_size_wl", fmt(size));
                t.set_meta("axis", "dq_wl in [0, 5] wavelengths, 21 points (artifact choice)");
                correlation_table(t, ctx, "dq_wl", dq, four_methods(c, 3), 0.5, &stats::ccf);
                out.push_back(std::move(t));
            }
            return out;
        }

        std::vector<ResultTable> ccf_time_fig5(const Context &ctx)
        {
            const auto dq = linspace(0.0, 5.0, 21);
            const double times[] = {0.0, 0.5, 1.0};

            auto t = ctx.table("ccf_time_fig5", default_correlation_realizations);
            t.set_meta("times_s", "0, 0.5, 1 (artifact choice)");
            t.set_meta("axis", "dq_wl in [0, 5] wavelengths, 21 points (artifact choice)");
            t.set_meta("error_bars", "<curve>_err3 columns hold 3 standard errors of the magnitude");
            t.columns = {"dq_wl"};

            std::vector<stats::CorrelationResult> results;
            for (auto kind : {PhaseMethodKind::zero, PhaseMethodKind::co_aligned})
            {
                const channel::ChannelModel model(with_method(ctx.base, kind));
                for (double time : times)
                {
                    const std::string label = "method" + std::to_string(int(kind)) + "_t" + fmt(time) + "s";
                    ctx.note(t.name + ": " + label);
                    results.push_back(stats::ccf(model, time, dq, ctx.ensemble(default_correlation_realizations)));
                    t.columns.push_back(label);
                    t.columns.push_back(label + "_err3");
                }
            }
            for (std::size_t i = 0; i < dq.size(); ++i)
            {
                std::vector<double> row{dq[i]};
                for (const auto &r : results)
                {
                    row.push_back(r.magnitude[i]);
                    row.push_back(3.0 * r.std_error[i]);
                }
                t.add_row(std::move(row));
            }
            return {t};
        }

        std::vector<ResultTable> fcf_fig6(const Context &ctx)
        {
            const double half = ctx.base.bandwidth_hz / 2.0;
            const auto df = linspace(0.0, half, 51);
            auto t = ctx.table("fcf_fig6", default_correlation_realizations);
            t.set_meta("t_s", "0.5");
            t.set_meta("frequency_grid", std::to_string(ctx.base.frequency_bins) + " bins across " +
                                             fmt(ctx.base.bandwidth_hz) + " Hz centered at the carrier");
            t.set_meta("axis", "df_hz in [0, bandwidth/2], 51 points (artifact choice)");
            correlation_table(t, ctx, "df_hz", df, four_methods(ctx.base, 2), 0.5, &stats::fcf);
            return {t};
        }

        ResultTable capacity_table(const Context &ctx, const std::string &name, const ScenarioConfig &base,
                                   const std::vector<Curve> &curves)
        {
            std::vector<double> snr_db;
            for (int i = -10; i <= 30; i += 2)
                snr_db.push_back(double(i));
            std::vector<double> snr;
            for (double d : snr_db)
                snr.push_back(db_to_linear(d));
            const auto times = linspace(0.0, 2.0, 101);

            auto t = ctx.table(name, default_capacity_realizations);
            t.set_meta("antennas", std::to_string(base.scene.tx.count) + "x" + std::to_string(base.scene.rx.count));
            t.set_meta("time_grid", "t in [0, 2] s, 101 points, trapezoidal average (artifact choice)");
            t.set_meta("axis", "snr_db in [-10, 30] dB, step 2 (artifact choice)");
            t.set_meta("bandwidth", base.capacity_bins > 0
                                        ? std::to_string(base.capacity_bins) + " frequency bins averaged"
                                        : std::string("narrowband, f = 0 tap sum"));
            t.columns = {"snr_db"};

            std::vector<stats::CapacityCurve> results;
            for (const auto &curve : curves)
            {
                ctx.note(name + ": " + curve.label);
                const channel::ChannelModel model(curve.config);
                results.push_back(stats::mean_capacity(model, times, snr, ctx.ensemble(default_capacity_realizations)));
                t.columns.push_back(curve.label);
                t.columns.push_back(curve.label + "_err3");
            }
            for (std::size_t i = 0; i < snr.size(); ++i)
            {
                std::vector<double> row{snr_db[i]};
                for (const auto &r : results)
                {
                    row.push_back(r.mean[i]);
                    row.push_back(3.0 * r.std_error[i]);
                }
                t.add_row(std::move(row));
            }
            describe(t, curves);
            t.set_meta("error_bars", "<curve>_err3 columns hold 3 standard errors of the mean capacity");
            return t;
        }

        std::vector<ResultTable> capacity_fig7(const Context &ctx)
        {
            std::vector<ResultTable> out;
            for (int n : {2, 4})
            {
                ScenarioConfig c = ctx.base;
                c.scene.tx.count = c.scene.rx.count = n;
                const std::string name = "capacity_fig7_" + std::to_string(n) + "x" + std::to_string(n);
                out.push_back(capacity_table(ctx, name, c, four_methods(c, 2)));
            }
            return out;
        }

        std::vector<ResultTable> custom(const Context &ctx)
        {
            const std::vector<Curve> curve{{"configured", ctx.base}};
            std::vector<ResultTable> out;

            auto acf = ctx.table("custom_acf", default_correlation_realizations);
            acf.set_meta("t_s", "0");
            correlation_table(acf, ctx, "dt_s", linspace(0.0, 10e-3, 41), curve, 0.0, &stats::acf);
            out.push_back(std::move(acf));

            auto ccf = ctx.table("custom_ccf", default_correlation_realizations);
            ccf.set_meta("t_s", "0");
            correlation_table(ccf, ctx, "dq_wl", linspace(0.0, 5.0, 21), curve, 0.0, &stats::ccf);
            out.push_back(std::move(ccf));

            auto fcf = ctx.table("custom_fcf", default_correlation_realizations);
            fcf.set_meta("t_s", "0");
            correlation_table(fcf, ctx, "df_hz", linspace(0.0, ctx.base.bandwidth_hz / 2.0, 51), curve, 0.0,
                              &stats::fcf);
            out.push_back(std::move(fcf));

            out.push_back(capacity_table(ctx, "custom_capacity", ctx.base, curve));
            return out;
        }
    }

    const std::vector<std::string> &preset_names()
    {
        static const std::vector<std::string> names{"acf_fig3", "ccf_fig4", "ccf_time_fig5",
                                                    "fcf_fig6", "capacity_fig7", "custom"};
        return names;
    }

    std::vector<ResultTable> build_preset(const std::string &name, const ScenarioConfig &base,
                                          const PresetOptions &options)
    {
        validate(base);
        const Context ctx{base, options, name};
        if (name == "acf_fig3")
            return acf_fig3(ctx);
        if (name == "ccf_fig4")
            return ccf_fig4(ctx);
        if (name == "ccf_time_fig5")
            return ccf_time_fig5(ctx);
        if (name == "fcf_fig6")
            return fcf_fig6(ctx);
        if (name == "capacity_fig7")
            return capacity_fig7(ctx);
        if (name == "custom")
            return custom(ctx);
        throw std::invalid_argument("Unknown preset '" + name + "'");
    }

    std::vector<std::filesystem::path> run_preset(const std::string &name, const ScenarioConfig &base,
                                                  const std::filesystem::path &out_dir, const PresetOptions &options)
    {
        const auto tables = build_preset(name, base, options);
        std::filesystem::create_directories(out_dir);
        std::vector<std::filesystem::path> written;
        for (const auto &t : tables)
        {
            const auto path = out_dir / (t.name + ".csv");
            emit_csv(t, path);
            written.push_back(path);
        }
        return written;
    }
}
