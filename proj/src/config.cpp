// SPDX-License-Identifier: Apache-2.0
//
// risuav: sub-array channel modelling for large-scale RIS assisted UAV links
// Copyright (C) 2026 The risuav authors
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

#include "risuav/config.hpp"
#include "risuav/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace risuav
{
    namespace
    {
        const std::set<std::string> &known_keys()
        {
            static const std::set<std::string> keys{
                "carrier.frequency_hz", "carrier.wavelength_m",

                "uav.height_m", "uav.speed_mps", "uav.azimuth_rad", "uav.elevation_rad", "uav.antennas",
                "uav.spacing_m", "uav.spacing_lambda", "uav.orientation_azimuth_rad", "uav.orientation_elevation_rad",

                "mr.start_x_m", "mr.speed_mps", "mr.azimuth_rad", "mr.antennas", "mr.spacing_m", "mr.spacing_lambda",
                "mr.orientation_azimuth_rad", "mr.orientation_elevation_rad",

                "ris.center_m", "ris.rotation_rad", "ris.width_m", "ris.height_m", "ris.cols", "ris.rows",
                "ris.unit_width_m", "ris.unit_width_lambda", "ris.unit_height_m", "ris.unit_height_lambda",
                "ris.configuration", "ris.random_draws", "ris.seed",

                "channel.reference_tx", "channel.reference_rx", "channel.doppler_reference",
                "channel.geometry_update_s",

                "sweep.t_start_s", "sweep.t_end_s", "sweep.t_steps", "sweep.dims_m", "sweep.fixed_uav_m",
                "sweep.fixed_mr_m"};
            return keys;
        }

        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        struct Entry
        {
            std::string value;
            std::size_t line;
        };

        class Entries
        {
        public:
            explicit Entries(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

            bool has(const std::string &key) const { return entries_.count(key) != 0; }

            // Rejects setting both members of a mutually exclusive pair.
            void exclusive(const std::string &a, const std::string &b) const
            {
                if (has(a) && has(b))
                {
                    const Entry &later = std::max(entries_.at(a), entries_.at(b),
                                                  [](const Entry &x, const Entry &y) { return x.line < y.line; });
                    throw ConfigError(later.line, "'" + a + "' and '" + b + "' are mutually exclusive");
                }
            }

            double real(const std::string &key, double fallback) const
            {
                if (!has(key))
                    return fallback;
                return parse_real(key, entries_.at(key).value);
            }

            long long integer(const std::string &key, long long fallback) const
            {
                if (!has(key))
                    return fallback;
                const Entry &e = entries_.at(key);
                long long v = 0;
                const char *first = e.value.data(), *last = first + e.value.size();
                const auto [ptr, ec] = std::from_chars(first, last, v);
                if (ec != std::errc() || ptr != last)
                    throw ConfigError(e.line, "'" + key + "' expects an integer, got '" + e.value + "'");
                return v;
            }

            std::vector<double> list(const std::string &key, std::vector<double> fallback) const
            {
                if (!has(key))
                    return fallback;
                std::vector<double> out;
                std::stringstream ss(entries_.at(key).value);
                std::string item;
                while (std::getline(ss, item, ','))
                    out.push_back(parse_real(key, trim(item)));
                if (out.empty())
                    throw ConfigError(entries_.at(key).line, "'" + key + "' expects a comma-separated list");
                return out;
            }

            Vec3 vec3(const std::string &key, const Vec3 &fallback) const
            {
                if (!has(key))
                    return fallback;
                const std::vector<double> v = list(key, {});
                if (v.size() != 3)
                    throw ConfigError(entries_.at(key).line, "'" + key + "' expects three comma-separated values");
                return Vec3(v[0], v[1], v[2]);
            }

            template <class T>
            T choice(const std::string &key, T fallback, const std::vector<std::pair<std::string, T>> &options) const
            {
                if (!has(key))
                    return fallback;
                const Entry &e = entries_.at(key);
                for (const auto &[name, value] : options)
                    if (e.value == name)
                        return value;
                std::string names;
                for (const auto &o : options)
                    names += (names.empty() ? "" : "|") + o.first;
                throw ConfigError(e.line, "'" + key + "' expects one of " + names + ", got '" + e.value + "'");
            }

            std::size_t line(const std::string &key) const { return has(key) ? entries_.at(key).line : 0; }

        private:
            double parse_real(const std::string &key, const std::string &text) const
            {
                double v = 0.0;
                const char *first = text.data(), *last = first + text.size();
                if (first != last && *first == '+')
                    ++first;
                const auto [ptr, ec] = std::from_chars(first, last, v);
                if (ec != std::errc() || ptr != last || !std::isfinite(v))
                    throw ConfigError(entries_.at(key).line, "'" + key + "' expects a finite number, got '" + text + "'");
                return v;
            }

            std::map<std::string, Entry> entries_;
        };

        Entries tokenize(const std::string &text)
        {
            std::map<std::string, Entry> entries;
            std::istringstream in(text);
            std::string raw;
            std::size_t line = 0;
            while (std::getline(in, raw))
            {
                ++line;
                const auto hash = raw.find('#');
                const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
                if (content.empty())
                    continue;

                const auto eq = content.find('=');
                if (eq == std::string::npos)
                    throw ConfigError(line, "expected 'key = value'");
                const std::string key = trim(content.substr(0, eq));
                const std::string value = trim(content.substr(eq + 1));
                if (key.empty())
                    throw ConfigError(line, "missing key before '='");
                if (value.empty())
                    throw ConfigError(line, "missing value for '" + key + "'");
                if (known_keys().count(key) == 0)
                    throw ConfigError(line, "unknown key '" + key + "'");
                if (entries.count(key) != 0)
                    throw ConfigError(line, "duplicate key '" + key + "' (first set on line " +
                                                std::to_string(entries.at(key).line) + ")");
                entries.emplace(key, Entry{value, line});
            }
            return Entries(std::move(entries));
        }

        int count_value(const Entries &e, const std::string &key, long long fallback)
        {
            const long long v = e.integer(key, fallback);
            if (v < 1 || v > 1000000)
                throw ConfigError(e.line(key), "'" + key + "' must lie in [1, 1000000]");
            return int(v);
        }

        double length_value(const Entries &e, const std::string &metres, const std::string &wavelengths,
                            double lambda, double fallback_wavelengths)
        {
            e.exclusive(metres, wavelengths);
            if (e.has(metres))
                return e.real(metres, 0.0);
            return e.real(wavelengths, fallback_wavelengths) * lambda;
        }

        int units_along(const Entries &e, const std::string &count_key, const std::string &side_key, double side,
                        double unit)
        {
            e.exclusive(count_key, side_key);
            if (e.has(count_key))
                return count_value(e, count_key, 1);
            const double s = e.real(side_key, side);
            if (!(s > 0.0))
                throw ConfigError(e.line(side_key), "'" + side_key + "' must be positive");
            const long long n = std::llround(s / unit);
            if (n < 1 || n > 1000000)
                throw ConfigError(e.line(side_key), "'" + side_key + "' gives " + std::to_string(n) + " units");
            return int(n);
        }
    }

    ScenarioFile default_scenario()
    {
        return parse_scenario("");
    }

    ScenarioFile parse_scenario(const std::string &text)
    {
        const Entries e = tokenize(text);
        ScenarioFile f;
        ScenarioConfig &c = f.scenario;

        e.exclusive("carrier.frequency_hz", "carrier.wavelength_m");
        if (e.has("carrier.wavelength_m"))
            c.carrier_wavelength = e.real("carrier.wavelength_m", 0.0);
        else
        {
            const double fc = e.real("carrier.frequency_hz", 28.0e9);
            if (!(fc > 0.0))
                throw ConfigError(e.line("carrier.frequency_hz"), "'carrier.frequency_hz' must be positive");
            c.carrier_wavelength = kSpeedOfLight / fc;
        }
        const double lambda = c.carrier_wavelength;

        c.uav_init_height = e.real("uav.height_m", 50.0);
        c.tx_velocity.speed = e.real("uav.speed_mps", 15.0);
        c.tx_velocity.azimuth = e.real("uav.azimuth_rad", 0.119429);
        c.tx_velocity.elevation = e.real("uav.elevation_rad", -0.098930);
        c.tx_antennas = count_value(e, "uav.antennas", 16);
        c.tx_spacing = length_value(e, "uav.spacing_m", "uav.spacing_lambda", lambda, 0.5);
        c.tx_orientation.azimuth = e.real("uav.orientation_azimuth_rad", 0.0);
        c.tx_orientation.elevation = e.real("uav.orientation_elevation_rad", 0.0);

        c.mr_init_x = e.real("mr.start_x_m", 400.0);
        c.rx_velocity.speed = e.real("mr.speed_mps", 15.0);
        c.rx_velocity.azimuth = e.real("mr.azimuth_rad", 3.075);
        c.rx_antennas = count_value(e, "mr.antennas", 16);
        c.rx_spacing = length_value(e, "mr.spacing_m", "mr.spacing_lambda", lambda, 0.5);
        c.rx_orientation.azimuth = e.real("mr.orientation_azimuth_rad", 0.0);
        c.rx_orientation.elevation = e.real("mr.orientation_elevation_rad", 0.0);

        c.ris_center = e.vec3("ris.center_m", Vec3(200.0, 50.0, 21.0));
        c.ris_rotation = e.real("ris.rotation_rad", 0.0);
        c.unit_width = length_value(e, "ris.unit_width_m", "ris.unit_width_lambda", lambda, 1.0 / 3.0);
        c.unit_height = length_value(e, "ris.unit_height_m", "ris.unit_height_lambda", lambda, 1.0 / 3.0);
        if (!(c.unit_width > 0.0) || !(c.unit_height > 0.0))
            throw ValidationError("unit_width/unit_height: must be positive");
        c.ris_cols = units_along(e, "ris.cols", "ris.width_m", 3.0, c.unit_width);
        c.ris_rows = units_along(e, "ris.rows", "ris.height_m", 2.0, c.unit_height);

        f.ris.mode = e.choice<RisMode>("ris.configuration", RisMode::Optimal,
                                       {{"optimal", RisMode::Optimal}, {"zero", RisMode::Fixed}, {"random", RisMode::Random}});
        f.ris.draws = count_value(e, "ris.random_draws", 10000);
        const long long seed = e.integer("ris.seed", 0);
        if (seed < 0)
            throw ConfigError(e.line("ris.seed"), "'ris.seed' must be >= 0");
        f.ris.seed = std::uint64_t(seed);
        f.ris.reference.tx = count_value(e, "channel.reference_tx", 1);
        f.ris.reference.rx = count_value(e, "channel.reference_rx", 1);
        if (f.ris.reference.tx > c.tx_antennas)
            throw ConfigError(e.line("channel.reference_tx"), "'channel.reference_tx' exceeds uav.antennas");
        if (f.ris.reference.rx > c.rx_antennas)
            throw ConfigError(e.line("channel.reference_rx"), "'channel.reference_rx' exceeds mr.antennas");

        c.doppler_reference = e.choice<DopplerReference>(
            "channel.doppler_reference", DopplerReference::Geometry,
            {{"geometry", DopplerReference::Geometry}, {"absolute", DopplerReference::Absolute}});
        c.geometry_update = e.real("channel.geometry_update_s", 0.0);

        SweepSettings &s = f.sweep;
        s.t_start = e.real("sweep.t_start_s", s.t_start);
        s.t_end = e.real("sweep.t_end_s", s.t_end);
        const long long steps = e.integer("sweep.t_steps", s.t_steps);
        if (steps < 0 || steps > 1000000)
            throw ConfigError(e.line("sweep.t_steps"), "'sweep.t_steps' must lie in [0, 1000000]");
        s.t_steps = int(steps);
        s.dims = e.list("sweep.dims_m", s.dims);
        s.fixed_uav = e.vec3("sweep.fixed_uav_m", s.fixed_uav);
        s.fixed_mr = e.vec3("sweep.fixed_mr_m", s.fixed_mr);

        validate(c);
        return f;
    }

    ScenarioFile load_scenario_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError(0, "cannot open config file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_scenario(ss.str());
    }

    ScenarioConfig load_config(const std::string &path)
    {
        return load_scenario_file(path).scenario;
    }

    std::vector<double> time_grid(double start, double end, int steps)
    {
        if (steps < 1)
            throw UsageError("time grid needs at least one step");
        if (!std::isfinite(start) || !std::isfinite(end) || start < 0.0)
            throw UsageError("time grid bounds must be finite and start >= 0");
        if (steps > 1 && !(end > start))
            throw UsageError("time grid end must exceed start");

        std::vector<double> grid(static_cast<std::size_t>(steps));
        for (int i = 0; i < steps; ++i)
            grid[std::size_t(i)] = steps == 1 ? start : start + (end - start) * double(i) / double(steps - 1);
        return grid;
    }
}
