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

#include "airs/config_io.hpp"
#include "airs/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

namespace airs
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        int line_of(const YAML::Node &node)
        {
            const auto mark = node.Mark();
            return mark.line >= 0 ? mark.line + 1 : 0;
        }

        std::string scalar(const YAML::Node &node, const std::string &key)
        {
            if (!node.IsScalar())
                throw config_error(key, "expected a scalar value", line_of(node));
            return node.Scalar();
        }

        double parse_number(const std::string &text, const std::string &key, int line)
        {
            const char *begin = text.c_str();
            char *end = nullptr;
            errno = 0;
            const double v = std::strtod(begin, &end);
            if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v))
                throw config_error(key, "'" + text + "' is not a finite number", line);
            return v;
        }

        double as_double(const YAML::Node &node, const std::string &key)
        {
            return parse_number(scalar(node, key), key, line_of(node));
        }

        double as_angle(const YAML::Node &node, const std::string &key)
        {
            try
            {
                return parse_angle(scalar(node, key));
            }
            catch (const config_error &)
            {
                throw;
            }
            catch (const std::invalid_argument &e)
            {
                throw config_error(key, e.what(), line_of(node));
            }
        }

        long long as_integer(const YAML::Node &node, const std::string &key)
        {
            const std::string text = scalar(node, key);
            const char *begin = text.c_str();
            char *end = nullptr;
            errno = 0;
            const long long v = std::strtoll(begin, &end, 10);
            if (end == begin || *end != '\0' || errno == ERANGE)
                throw config_error(key, "'" + text + "' is not an integer", line_of(node));
            return v;
        }

        int as_int(const YAML::Node &node, const std::string &key)
        {
            const long long v = as_integer(node, key);
            if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
                throw config_error(key, "integer out of range", line_of(node));
            return int(v);
        }

        std::uint64_t as_u64(const YAML::Node &node, const std::string &key)
        {
            const std::string text = scalar(node, key);
            const char *begin = text.c_str();
            char *end = nullptr;
            errno = 0;
            if (!text.empty() && text.front() == '-')
                throw config_error(key, "must be non-negative", line_of(node));
            const unsigned long long v = std::strtoull(begin, &end, 10);
            if (end == begin || *end != '\0' || errno == ERANGE)
                throw config_error(key, "'" + text + "' is not an unsigned integer", line_of(node));
            return std::uint64_t(v);
        }

        bool as_bool(const YAML::Node &node, const std::string &key)
        {
            const std::string text = scalar(node, key);
            if (text == "true" || text == "1")
                return true;
            if (text == "false" || text == "0")
                return false;
            throw config_error(key, "expected true or false", line_of(node));
        }

        using Setter = std::function<void(const YAML::Node &, const std::string &)>;
        using Section = std::map<std::string, Setter>;

        void apply_section(const YAML::Node &root, const std::string &name, const Section &setters)
        {
            const YAML::Node node = root[name];
            if (!node || node.IsNull())
                return;
            if (!node.IsMap())
                throw config_error(name, "expected a mapping", line_of(node));
            for (const auto &entry : node)
            {
                const std::string key = entry.first.as<std::string>();
                const std::string full = name + "." + key;
                const auto it = setters.find(key);
                if (it == setters.end())
                    throw config_error(full, "unknown key", line_of(entry.first));
                it->second(entry.second, full);
            }
        }

        Section panel_section(geometry::SurfacePanel &p, const double &lambda)
        {
            return {
                {"units_h", [&](const YAML::Node &n, const std::string &k) { p.n_h = as_int(n, k); }},
                {"units_v", [&](const YAML::Node &n, const std::string &k) { p.n_v = as_int(n, k); }},
                {"unit_width_wl", [&](const YAML::Node &n, const std::string &k) { p.unit_w = as_double(n, k) * lambda; }},
                {"unit_height_wl",
                 [&](const YAML::Node &n, const std::string &k) { p.unit_h = as_double(n, k) * lambda; }},
                {"position_m",
                 [&](const YAML::Node &n, const std::string &k) {
                     if (!n.IsSequence() || n.size() != 3)
                         throw config_error(k, "expected [x, y, z]", line_of(n));
                     for (int i = 0; i < 3; ++i)
                         p.anchor[i] = as_double(n[std::size_t(i)], k);
                 }},
                {"rotation",
                 [&](const YAML::Node &n, const std::string &k) {
                     if (!n.IsMap())
                         throw config_error(k, "expected {pitch, yaw, roll}", line_of(n));
                     for (const auto &e : n)
                     {
                         const std::string sub = e.first.as<std::string>();
                         const std::string full = k + "." + sub;
                         if (sub == "pitch")
                             p.rotation.pitch = as_angle(e.second, full);
                         else if (sub == "yaw")
                             p.rotation.yaw = as_angle(e.second, full);
                         else if (sub == "roll")
                             p.rotation.roll = as_angle(e.second, full);
                         else
                             throw config_error(full, "unknown key", line_of(e.first));
                     }
                 }},
                {"speed_mps", [&](const YAML::Node &n, const std::string &k) { p.speed = as_double(n, k); }},
                {"move_azimuth", [&](const YAML::Node &n, const std::string &k) { p.move_azimuth = as_angle(n, k); }},
                {"move_elevation",
                 [&](const YAML::Node &n, const std::string &k) { p.move_elevation = as_angle(n, k); }},
            };
        }

        Section ula_section(geometry::UlaSpec &u, const double &lambda)
        {
            return {
                {"antennas", [&](const YAML::Node &n, const std::string &k) { u.count = as_int(n, k); }},
                {"spacing_wl", [&](const YAML::Node &n, const std::string &k) { u.spacing = as_double(n, k) * lambda; }},
                {"azimuth", [&](const YAML::Node &n, const std::string &k) { u.azimuth = as_angle(n, k); }},
                {"elevation", [&](const YAML::Node &n, const std::string &k) { u.elevation = as_angle(n, k); }},
            };
        }

        std::string num(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        // Nearest double to `guess` that `forward` maps exactly onto `target`, so the
        // rendered value parses back to the same bits. Falls back to `guess`.
        template <typename Fn>
        double invert(double target, double guess, Fn forward)
        {
            if (!std::isfinite(guess))
                return guess;
            double up = guess, down = guess;
            for (int i = 0; i < 64; ++i)
            {
                if (forward(up) == target)
                    return up;
                if (forward(down) == target)
                    return down;
                up = std::nextafter(up, HUGE_VAL);
                down = std::nextafter(down, -HUGE_VAL);
            }
            return guess;
        }

        double linear_to_db(double v)
        {
            return invert(v, 10.0 * std::log10(v), db_to_linear);
        }

        double to_wavelengths(double meters, double lambda)
        {
            return invert(meters, meters / lambda, [lambda](double x) { return x * lambda; });
        }
    }

    double parse_angle(const std::string &expr)
    {
        std::string s;
        for (char c : expr)
            if (c != ' ' && c != '\t')
                s += c;
        const auto fail = [&] { return std::invalid_argument("'" + expr + "' is not a valid angle"); };
        if (s.empty())
            throw fail();

        std::size_t pos = 0;
        double sign = 1.0;
        if (s[pos] == '+' || s[pos] == '-')
            sign = s[pos++] == '-' ? -1.0 : 1.0;

        double value = 1.0;
        bool have_number = false, have_pi = false;
        if (pos < s.size() && s.compare(pos, 2, "pi") != 0)
        {
            const char *begin = s.c_str() + pos;
            char *end = nullptr;
            value = std::strtod(begin, &end);
            if (end == begin)
                throw fail();
            pos += std::size_t(end - begin);
            have_number = true;
        }
        if (have_number && pos < s.size() && s[pos] == '*')
        {
            ++pos;
            if (s.compare(pos, 2, "pi") != 0)
                throw fail();
        }
        if (s.compare(pos, 2, "pi") == 0)
        {
            value *= pi;
            pos += 2;
            have_pi = true;
        }
        if (!have_number && !have_pi)
            throw fail();
        if (pos < s.size() && s[pos] == '/')
        {
            ++pos;
            const char *begin = s.c_str() + pos;
            char *end = nullptr;
            const double den = std::strtod(begin, &end);
            if (end == begin || den == 0.0)
                throw fail();
            pos += std::size_t(end - begin);
            value /= den;
        }
        if (pos != s.size() || !std::isfinite(value))
            throw fail();
        return sign * value;
    }

    ConfigFile parse_config_file(const std::string &text)
    {
        YAML::Node root;
        try
        {
            root = YAML::Load(text);
        }
        catch (const YAML::ParserException &e)
        {
            throw config_error("yaml", e.msg, e.mark.line + 1);
        }

        ConfigFile out;
        out.scenario = default_config();
        if (!root || root.IsNull())
        {
            validate(out.scenario);
            return out;
        }
        if (!root.IsMap())
            throw config_error("yaml", "top level must be a mapping", line_of(root));

        static const char *sections[] = {"general", "run", "tx", "rx", "irs", "airs", "clusters", "phase", "analysis"};
        for (const auto &entry : root)
        {
            const std::string name = entry.first.as<std::string>();
            if (std::find(std::begin(sections), std::end(sections), name) == std::end(sections))
                throw config_error(name, "unknown section", line_of(entry.first));
        }

        auto &c = out.scenario;
        auto &s = c.scene;

        // The carrier fixes lambda for every wavelength-relative entry, so it goes first.
        apply_section(root, "general",
                      {
                          {"carrier_hz", [&](const YAML::Node &n, const std::string &k) { c.carrier_hz = as_double(n, k); }},
                          {"k_airs_db",
                           [&](const YAML::Node &n, const std::string &k) { c.k_airs = db_to_linear(as_double(n, k)); }},
                          {"k_irs_db",
                           [&](const YAML::Node &n, const std::string &k) { c.k_irs = db_to_linear(as_double(n, k)); }},
                          {"distance_m", [&](const YAML::Node &n, const std::string &k) { s.distance = as_double(n, k); }},
                          {"bs_height_m", [&](const YAML::Node &n, const std::string &k) { s.bs_height = as_double(n, k); }},
                          {"angle_convention",
                           [&](const YAML::Node &n, const std::string &k) {
                               const std::string v = scalar(n, k);
                               if (v == "consistent")
                                   s.convention = geometry::AngleConvention::consistent;
                               else if (v == "closed_form")
                                   s.convention = geometry::AngleConvention::closed_form;
                               else
                                   throw config_error(k, "expected consistent or closed_form", line_of(n));
                           }},
                      });
        if (!(c.carrier_hz > 0.0))
            throw config_error("general.carrier_hz", "must be > 0");

        // Wavelength-relative sizes in the defaults follow the configured carrier.
        const double lambda0 = default_config().wavelength();
        const double lambda = c.wavelength();
        const double scale = lambda / lambda0;
        s.tx.spacing *= scale;
        s.rx.spacing *= scale;
        for (auto *p : {&s.irs, &s.airs})
        {
            p->unit_w *= scale;
            p->unit_h *= scale;
        }

        apply_section(root, "run",
                      {
                          {"seed", [&](const YAML::Node &n, const std::string &k) { out.seed = as_u64(n, k); }},
                          {"realizations",
                           [&](const YAML::Node &n, const std::string &k) {
                               const auto v = as_u64(n, k);
                               if (v == 0)
                                   throw config_error(k, "must be >= 1", line_of(n));
                               out.realizations = std::size_t(v);
                           }},
                      });

        Section rx = ula_section(s.rx, lambda);
        rx["speed_mps"] = [&](const YAML::Node &n, const std::string &k) { s.rx_motion.speed = as_double(n, k); };
        rx["move_azimuth"] = [&](const YAML::Node &n, const std::string &k) {
            s.rx_motion.move_azimuth = as_angle(n, k);
        };
        apply_section(root, "tx", ula_section(s.tx, lambda));
        apply_section(root, "rx", rx);
        apply_section(root, "irs", panel_section(s.irs, lambda));
        apply_section(root, "airs", panel_section(s.airs, lambda));

        auto &cl = c.clusters;
        apply_section(
            root, "clusters",
            {
                {"count", [&](const YAML::Node &n, const std::string &k) { cl.clusters = as_int(n, k); }},
                {"rays", [&](const YAML::Node &n, const std::string &k) { cl.rays = as_int(n, k); }},
                {"delay_scaling", [&](const YAML::Node &n, const std::string &k) { cl.delay_scaling = as_double(n, k); }},
                {"delay_spread_s", [&](const YAML::Node &n, const std::string &k) { cl.delay_spread = as_double(n, k); }},
                {"shadowing_db", [&](const YAML::Node &n, const std::string &k) { cl.shadowing_db = as_double(n, k); }},
                {"initial_range_m",
                 [&](const YAML::Node &n, const std::string &k) { cl.initial_range = as_double(n, k); }},
                {"angle_mean", [&](const YAML::Node &n, const std::string &k) { cl.angles.mean = as_angle(n, k); }},
                {"angle_sigma", [&](const YAML::Node &n, const std::string &k) { cl.angles.sigma = as_angle(n, k); }},
                {"angle_low", [&](const YAML::Node &n, const std::string &k) { cl.angles.low = as_angle(n, k); }},
                {"angle_up", [&](const YAML::Node &n, const std::string &k) { cl.angles.up = as_angle(n, k); }},
            });

        apply_section(root, "phase",
                      {
                          {"method",
                           [&](const YAML::Node &n, const std::string &k) {
                               const int m = as_int(n, k);
                               if (m < 1 || m > 4)
                                   throw config_error(k, "must be 1, 2, 3 or 4", line_of(n));
                               c.method.kind = phase::PhaseMethodKind(m);
                           }},
                          {"bits", [&](const YAML::Node &n, const std::string &k) { c.method.bits = as_int(n, k); }},
                          {"target", [&](const YAML::Node &n, const std::string &k) { c.method.target = as_angle(n, k); }},
                          {"exclude_irs_path",
                           [&](const YAML::Node &n, const std::string &k) { c.exclude_irs_path = as_bool(n, k); }},
                      });

        apply_section(
            root, "analysis",
            {
                {"bandwidth_hz", [&](const YAML::Node &n, const std::string &k) { c.bandwidth_hz = as_double(n, k); }},
                {"frequency_bins", [&](const YAML::Node &n, const std::string &k) { c.frequency_bins = as_int(n, k); }},
                {"capacity_bins", [&](const YAML::Node &n, const std::string &k) { c.capacity_bins = as_int(n, k); }},
            });

        validate(c);
        return out;
    }

    ConfigFile read_config_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw config_error("file", "cannot open " + path.string());
        std::ostringstream text;
        text << in.rdbuf();
        return parse_config_file(text.str());
    }

    ScenarioConfig parse_config(const std::string &text)
    {
        return parse_config_file(text).scenario;
    }

    ScenarioConfig load_config(const std::filesystem::path &path)
    {
        return read_config_file(path).scenario;
    }

    std::string canonical_config(const ScenarioConfig &c)
    {
        const auto &s = c.scene;
        const double lambda = c.wavelength();
        std::ostringstream o;
        o << "general:\n"
          << "  carrier_hz: " << num(c.carrier_hz) << "\n"
          << "  k_airs_db: " << num(linear_to_db(c.k_airs)) << "\n"
          << "  k_irs_db: " << num(linear_to_db(c.k_irs)) << "\n"
          << "  distance_m: " << num(s.distance) << "\n"
          << "  bs_height_m: " << num(s.bs_height) << "\n"
          << "  angle_convention: "
          << (s.convention == geometry::AngleConvention::closed_form ? "closed_form" : "consistent") << "\n";

        const auto ula = [&](const char *name, const geometry::UlaSpec &u) {
            o << name << ":\n"
              << "  antennas: " << u.count << "\n"
              << "  spacing_wl: " << num(to_wavelengths(u.spacing, lambda)) << "\n"
              << "  azimuth: " << num(u.azimuth) << "\n"
              << "  elevation: " << num(u.elevation) << "\n";
        };
        ula("tx", s.tx);
        ula("rx", s.rx);
        o << "  speed_mps: " << num(s.rx_motion.speed) << "\n"
          << "  move_azimuth: " << num(s.rx_motion.move_azimuth) << "\n";

        const auto panel = [&](const char *name, const geometry::SurfacePanel &p) {
            o << name << ":\n"
              << "  units_h: " << p.n_h << "\n"
              << "  units_v: " << p.n_v << "\n"
              << "  unit_width_wl: " << num(to_wavelengths(p.unit_w, lambda)) << "\n"
              << "  unit_height_wl: " << num(to_wavelengths(p.unit_h, lambda)) << "\n"
              << "  position_m: [" << num(p.anchor.x()) << ", " << num(p.anchor.y()) << ", " << num(p.anchor.z())
              << "]\n"
              << "  rotation: {pitch: " << num(p.rotation.pitch) << ", yaw: " << num(p.rotation.yaw)
              << ", roll: " << num(p.rotation.roll) << "}\n"
              << "  speed_mps: " << num(p.speed) << "\n"
              << "  move_azimuth: " << num(p.move_azimuth) << "\n"
              << "  move_elevation: " << num(p.move_elevation) << "\n";
        };
        panel("irs", s.irs);
        panel("airs", s.airs);

        const auto &cl = c.clusters;
        o << "clusters:\n"
          << "  count: " << cl.clusters << "\n"
          << "  rays: " << cl.rays << "\n"
          << "  delay_scaling: " << num(cl.delay_scaling) << "\n"
          << "  delay_spread_s: " << num(cl.delay_spread) << "\n"
          << "  shadowing_db: " << num(cl.shadowing_db) << "\n"
          << "  initial_range_m: " << num(cl.initial_range) << "\n"
          << "  angle_mean: " << num(cl.angles.mean) << "\n"
          << "  angle_sigma: " << num(cl.angles.sigma) << "\n"
          << "  angle_low: " << num(cl.angles.low) << "\n"
          << "  angle_up: " << num(cl.angles.up) << "\n";

        o << "phase:\n"
          << "  method: " << int(c.method.kind) << "\n"
          << "  bits: " << c.method.bits << "\n"
          << "  target: " << num(c.method.target) << "\n"
          << "  exclude_irs_path: " << (c.exclude_irs_path ? "true" : "false") << "\n";

        o << "analysis:\n"
          << "  bandwidth_hz: " << num(c.bandwidth_hz) << "\n"
          << "  frequency_bins: " << c.frequency_bins << "\n"
          << "  capacity_bins: " << c.capacity_bins << "\n";
        return o.str();
    }

    std::string config_hash(const ScenarioConfig &config)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char ch : canonical_config(config))
        {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
}
