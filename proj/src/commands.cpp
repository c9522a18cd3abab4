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
#include "risuav/errors.hpp"

#include <filesystem>

namespace risuav
{
    const char *command_name(Command command)
    {
        switch (command)
        {
        case Command::PartitionEvolution:
            return "partition-evolution";
        case Command::AccuracyTime:
            return "accuracy-time";
        case Command::AccuracyDimension:
            return "accuracy-dimension";
        case Command::Complexity:
            return "complexity";
        }
        return "unknown";
    }

    CsvTable partition_evolution_table(const std::vector<TimePoint> &points)
    {
        CsvTable t;
        t.header = {"t_s", "xi_min_m", "m_sub", "n_sub", "total_subarrays", "first_cols", "first_rows"};
        for (const auto &p : points)
            t.rows.push_back({format_real(p.t), format_real(p.xi_min), format_int(p.m_sub), format_int(p.n_sub),
                              format_int(p.total), format_int(p.first_cols), format_int(p.first_rows)});
        return t;
    }

    CsvTable accuracy_time_table(const std::vector<TimePoint> &points)
    {
        CsvTable t;
        t.header = {"sweep_var", "delta_planar_db", "delta_subarray_db", "oracle_runtime_s"};
        for (const auto &p : points)
            t.rows.push_back({format_real(p.t), format_real(p.delta_planar_db), format_real(p.delta_subarray_db),
                              format_real(p.wall_spherical_s)});
        return t;
    }

    CsvTable accuracy_dimension_table(const std::vector<DimensionPoint> &points)
    {
        CsvTable t;
        t.header = {"sweep_var", "delta_planar_db", "delta_subarray_db", "oracle_runtime_s"};
        for (const auto &p : points)
            t.rows.push_back({format_real(p.side), format_real(p.delta_planar_db), format_real(p.delta_subarray_db),
                              format_real(p.wall_spherical_s)});
        return t;
    }

    CsvTable complexity_table(const std::vector<TimePoint> &points)
    {
        CsvTable t;
        t.header = {"t_s", "params_spherical", "params_planar", "params_subarray", "reduction_fraction",
                    "wall_spherical_s", "wall_subarray_s"};
        for (const auto &p : points)
            t.rows.push_back({format_real(p.t), format_int(p.complexity.spherical_params),
                              format_int(p.complexity.planar_params), format_int(p.complexity.subarray_params),
                              format_real(p.complexity.reduction_fraction), format_real(p.wall_spherical_s),
                              format_real(p.wall_subarray_s)});
        return t;
    }

    std::string run_command(RunManifest &manifest, const ScenarioFile &scenario, const RunOptions &opts)
    {
        SweepOptions sweep;
        sweep.threads = opts.threads;
        sweep.timing = opts.timing;
        sweep.ris = scenario.ris;
        sweep.ris.seed = manifest.seed;

        CsvTable table;
        switch (manifest.command)
        {
        case Command::PartitionEvolution:
        {
            const auto points = sweep_time(scenario.scenario, opts.t_grid, sweep);
            table = partition_evolution_table(points);
            break;
        }
        case Command::AccuracyTime:
        {
            sweep.spherical = true;
            sweep.planar = opts.planar;
            sweep.subarray = opts.subarray;
            const auto points = sweep_time(scenario.scenario, opts.t_grid, sweep);
            table = accuracy_time_table(points);
            break;
        }
        case Command::AccuracyDimension:
        {
            const auto points = sweep_dimension(scenario.scenario, opts.dims, scenario.sweep.fixed_uav,
                                                scenario.sweep.fixed_mr, sweep);
            table = accuracy_dimension_table(points);
            if (!opts.planar || !opts.subarray)
                for (auto &row : table.rows)
                    (opts.planar ? row[2] : row[1]).clear();
            break;
        }
        case Command::Complexity:
        {
            // Snapshots only when runtimes are requested.
            sweep.spherical = opts.timing;
            sweep.subarray = opts.timing;
            const auto points = sweep_time(scenario.scenario, opts.t_grid, sweep);
            table = complexity_table(points);
            break;
        }
        }
        manifest.sample_count = int(table.rows.size());

        std::filesystem::create_directories(manifest.output_dir);
        std::string stem = command_name(manifest.command);
        for (char &c : stem)
            if (c == '-')
                c = '_';
        const std::string path = (std::filesystem::path(manifest.output_dir) / (stem + ".csv")).string();
        write_csv(path, table);
        return path;
    }
}
