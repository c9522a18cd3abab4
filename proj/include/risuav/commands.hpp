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

#ifndef RISUAV_COMMANDS_HPP
#define RISUAV_COMMANDS_HPP

#include "risuav/config.hpp"
#include "risuav/csv.hpp"
#include "risuav/sweep.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace risuav
{
    enum class Command
    {
        PartitionEvolution,
        AccuracyTime,
        AccuracyDimension,
        Complexity
    };

    // CLI name, also the CSV file stem with '-' replaced by '_'.
    const char *command_name(Command command);

    struct RunManifest
    {
        std::string config_path; // empty: built-in default scenario
        Command command = Command::PartitionEvolution;
        std::string output_dir = ".";
        std::uint64_t seed = 0; // random RIS ensemble, replaces ScenarioFile::ris.seed
        int sample_count = 0; // grid points evaluated, filled by run_command
    };

    struct RunOptions
    {
        std::vector<double> t_grid; // time commands
        std::vector<double> dims;   // accuracy-dimension
        bool planar = true;
        bool subarray = true;
        bool timing = false;
        int threads = 0;
    };

    CsvTable partition_evolution_table(const std::vector<TimePoint> &points);
    CsvTable accuracy_time_table(const std::vector<TimePoint> &points);
    CsvTable accuracy_dimension_table(const std::vector<DimensionPoint> &points);
    CsvTable complexity_table(const std::vector<TimePoint> &points);

    // Runs the command and writes <output_dir>/<command>.csv; returns the file path.
    std::string run_command(RunManifest &manifest, const ScenarioFile &scenario, const RunOptions &opts);
}

#endif
