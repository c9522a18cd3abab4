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

#ifndef RISUAV_CONFIG_HPP
#define RISUAV_CONFIG_HPP

#include "risuav/geometry.hpp"
#include "risuav/sweep.hpp"

#include <string>
#include <vector>

namespace risuav
{
    struct SweepSettings
    {
        double t_start = 0.0;  // [s]
        double t_end = 27.0;   // [s]
        int t_steps = 21;
        std::vector<double> dims{0.1, 0.2, 0.3, 0.4, 0.6, 0.8, 1.0, 1.25, 1.5, 2.0, 2.5, 3.0}; // [m]
        Vec3 fixed_uav = Vec3(100.0, -50.0, 50.0); // [m]
        Vec3 fixed_mr = Vec3(250.0, 10.0, 0.0);    // [m]
    };

    // Everything a scenario file can set.
    struct ScenarioFile
    {
        ScenarioConfig scenario;
        RisPolicy ris;
        SweepSettings sweep;
    };

    // Built-in scenario: 28 GHz, 3 m x 2 m RIS of λ/3 units centred at (200, 50, 21) m,
    // 16-element half-wavelength ULAs, MR from (400, 0, 0) at 15 m/s, UAV passing near the RIS.
    ScenarioFile default_scenario();

    // Parses `key = value` lines (`#` starts a comment). Unknown, duplicate or malformed
    // keys throw ConfigError with the line number; the result is validated (ValidationError).
    ScenarioFile parse_scenario(const std::string &text);
    ScenarioFile load_scenario_file(const std::string &path);

    ScenarioConfig load_config(const std::string &path);

    // Evenly spaced grid including both ends; a single step yields {start}.
    std::vector<double> time_grid(double start, double end, int steps);
}

#endif
