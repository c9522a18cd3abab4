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

#ifndef RISUAV_SWEEP_HPP
#define RISUAV_SWEEP_HPP

#include "risuav/channel.hpp"
#include "risuav/metrics.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace risuav
{
    // How the RIS is configured at every sweep point. Optimal phases are derived from the
    // exact per-unit geometry and shared by all models at that point.
    struct RisPolicy
    {
        RisMode mode = RisMode::Optimal;
        std::uint64_t seed = 0;
        int draws = 10000;
        AntennaPair reference;
    };

    RisConfiguration make_ris(const ScenarioConfig &cfg, const RisPolicy &policy, double t);

    struct SweepOptions
    {
        bool spherical = false; // required by planar/subarray accuracy, implied by them
        bool planar = false;
        bool subarray = false;
        bool timing = false;    // record wall-clock runtimes (non-deterministic columns)
        int threads = 0;        // 0: SIM_THREADS, else hardware concurrency
        RisPolicy ris;
    };

    struct TimePoint
    {
        double t = 0.0;
        double xi_min = 0.0;
        int first_cols = 0;
        int first_rows = 0;
        int m_sub = 0;
        int n_sub = 0;
        int total = 0;
        ComplexityReport complexity;
        std::optional<double> delta_planar_db;
        std::optional<double> delta_subarray_db;
        std::optional<double> wall_spherical_s;
        std::optional<double> wall_planar_s;
        std::optional<double> wall_subarray_s;
    };

    // One point per instant, in grid order. t_grid must be non-empty and strictly increasing.
    std::vector<TimePoint> sweep_time(const ScenarioConfig &cfg, const std::vector<double> &t_grid,
                                      const SweepOptions &opts);

    struct DimensionPoint
    {
        double side = 0.0; // square RIS side length [m]
        int ris_cols = 0;
        int ris_rows = 0;
        int m_sub = 0;
        int n_sub = 0;
        double delta_planar_db = 0.0;
        double delta_subarray_db = 0.0;
        std::optional<double> wall_spherical_s;
    };

    // Terminals placed so that they sit at uav_at / mr_at at t = 1 s, where every model
    // is evaluated for a square RIS of each side length. The MR target must lie on the ground.
    ScenarioConfig place_terminals(const ScenarioConfig &cfg, const Vec3 &uav_at, const Vec3 &mr_at);

    std::vector<DimensionPoint> sweep_dimension(const ScenarioConfig &cfg, const std::vector<double> &sides,
                                                const Vec3 &uav_at, const Vec3 &mr_at, const SweepOptions &opts);

    // Worker count: explicit request, else SIM_THREADS, else hardware concurrency; at least 1.
    int resolve_threads(int requested);
}

#endif
