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

#include "risuav/commands.hpp"
#include "risuav/config.hpp"
#include "risuav/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    constexpr int kExitOk = 0;
    constexpr int kExitRuntime = 1;
    constexpr int kExitUsage = 2;

    struct Flags
    {
        std::string config;
        std::string out = ".";
        std::optional<std::uint64_t> seed;
        std::optional<double> t_start, t_end;
        std::optional<int> t_steps;
        std::string dims;
        std::string models = "planar,subarray";
        bool timing = false;
    };

    std::vector<std::string> split(const std::string &text)
    {
        std::vector<std::string> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            const auto b = item.find_first_not_of(' ');
            const auto e = item.find_last_not_of(' ');
            if (b == std::string::npos)
                throw risuav::UsageError("empty item in list '" + text + "'");
            out.push_back(item.substr(b, e - b + 1));
        }
        return out;
    }

    std::vector<double> parse_dims(const std::string &text)
    {
        std::vector<double> dims;
        for (const auto &item : split(text))
        {
            std::size_t used = 0;
            double v = 0.0;
            try
            {
                v = std::stod(item, &used);
            }
            catch (const std::exception &)
            {
                used = 0;
            }
            if (used != item.size() || !(v > 0.0))
                throw risuav::UsageError("--dims expects positive lengths in metres, got '" + item + "'");
            dims.push_back(v);
        }
        return dims;
    }

    risuav::RunOptions run_options(const Flags &f, const risuav::ScenarioFile &scenario, risuav::Command command)
    {
        risuav::RunOptions o;
        o.timing = f.timing;

        if (command == risuav::Command::AccuracyDimension)
            o.dims = f.dims.empty() ? scenario.sweep.dims : parse_dims(f.dims);
        else
        {
            const int steps = f.t_steps.value_or(scenario.sweep.t_steps);
            if (steps < 1)
                throw risuav::UsageError("--t-steps must be >= 1 (empty time grid)");
            o.t_grid = risuav::time_grid(f.t_start.value_or(scenario.sweep.t_start),
                                         f.t_end.value_or(scenario.sweep.t_end), steps);
        }

        o.planar = o.subarray = false;
        for (const auto &m : split(f.models))
        {
            if (m == "planar")
                o.planar = true;
            else if (m == "subarray")
                o.subarray = true;
            else
                throw risuav::UsageError("--models accepts planar and subarray, got '" + m + "'");
        }
        return o;
    }

    int run(const Flags &f, risuav::Command command)
    {
        risuav::ScenarioFile scenario;
        risuav::RunOptions opts;
        risuav::RunManifest manifest;
        try
        {
            scenario = f.config.empty() ? risuav::default_scenario() : risuav::load_scenario_file(f.config);
            opts = run_options(f, scenario, command);
        }
        catch (const risuav::Error &e)
        {
            std::cerr << "risuav: " << (f.config.empty() ? "" : f.config + ": ") << e.what() << '\n';
            return kExitUsage;
        }

        manifest.config_path = f.config;
        manifest.command = command;
        manifest.output_dir = f.out;
        manifest.seed = f.seed.value_or(scenario.ris.seed);
        try
        {
            const std::string path = risuav::run_command(manifest, scenario, opts);
            std::cout << path << " (" << manifest.sample_count << " rows)\n";
            return kExitOk;
        }
        catch (const risuav::UsageError &e)
        {
            std::cerr << "risuav: " << e.what() << '\n';
            return kExitUsage;
        }
        catch (const std::exception &e)
        {
            std::cerr << "risuav: " << risuav::command_name(command) << " failed: " << e.what() << '\n';
            return kExitRuntime;
        }
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Sub-array channel modelling for large-scale RIS assisted UAV links"};
    app.require_subcommand(1);

    Flags flags;
    std::optional<risuav::Command> chosen;

    auto add = [&](risuav::Command command, const std::string &help, bool time_flags, bool dim_flags, bool models)
    {
        CLI::App *sub = app.add_subcommand(risuav::command_name(command), help);
        sub->add_option("--config", flags.config, "Scenario file (key = value); built-in defaults when omitted")
            ->check(CLI::ExistingFile);
        sub->add_option("--out", flags.out, "Output directory")->capture_default_str();
        sub->add_option("--seed", flags.seed, "Seed of the random RIS configuration (overrides ris.seed)");
        if (time_flags)
        {
            sub->add_option("--t-start", flags.t_start, "First instant [s]");
            sub->add_option("--t-end", flags.t_end, "Last instant [s]");
            sub->add_option("--t-steps", flags.t_steps, "Number of instants");
        }
        if (dim_flags)
            sub->add_option("--dims", flags.dims, "Comma-separated square RIS side lengths [m]");
        if (models)
            sub->add_option("--models", flags.models, "Comma-separated models compared to the spherical oracle")
                ->capture_default_str();
        sub->add_flag("--timing", flags.timing, "Record wall-clock runtimes (output no longer reproducible)");
        sub->callback([&chosen, command] { chosen = command; });
    };

    add(risuav::Command::PartitionEvolution, "Sub-array grid along the trajectory", true, false, false);
    add(risuav::Command::AccuracyTime, "Model error against the spherical oracle along the trajectory", true, false,
        true);
    add(risuav::Command::AccuracyDimension, "Model error against the spherical oracle versus RIS size", false, true,
        true);
    add(risuav::Command::Complexity, "Parameter counts per model along the trajectory", true, false, false);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    return run(flags, *chosen);
}
