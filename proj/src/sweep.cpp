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

#include "risuav/sweep.hpp"
#include "risuav/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

namespace risuav
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        template <class Fn>
        auto timed(bool enabled, std::optional<double> &seconds, Fn &&fn)
        {
            const auto start = Clock::now();
            auto result = fn();
            if (enabled)
                seconds = std::chrono::duration<double>(Clock::now() - start).count();
            return result;
        }

        // Runs body(i) for i in [0, count) on up to `threads` workers. Results are written by
        // index; the exception of the lowest failing index is rethrown.
        template <class Body>
        void parallel_for(std::size_t count, int threads, Body &&body)
        {
            std::vector<std::exception_ptr> errors(count);
            std::atomic<std::size_t> next{0};
            auto worker = [&]()
            {
                for (std::size_t i = next++; i < count; i = next++)
                {
                    try
                    {
                        body(i);
                    }
                    catch (...)
                    {
                        errors[i] = std::current_exception();
                    }
                }
            };

            const std::size_t workers = std::min<std::size_t>(std::size_t(std::max(threads, 1)), count);
            std::vector<std::thread> pool;
            for (std::size_t w = 1; w < workers; ++w)
                pool.emplace_back(worker);
            worker();
            for (auto &th : pool)
                th.join();

            for (const auto &e : errors)
                if (e)
                    std::rethrow_exception(e);
        }

        SynthesisOptions sweep_synthesis() { return {false}; }
    }

    int resolve_threads(int requested)
    {
        if (requested > 0)
            return requested;
        if (const char *env = std::getenv("SIM_THREADS"))
        {
            char *end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v > 0)
                return int(std::min<long>(v, 1024));
        }
        return int(std::max(1u, std::thread::hardware_concurrency()));
    }

    RisConfiguration make_ris(const ScenarioConfig &cfg, const RisPolicy &policy, double t)
    {
        RisConfiguration r;
        switch (policy.mode)
        {
        case RisMode::Optimal:
            r = optimal_phases(cfg, unit_partition(cfg, t), t, policy.reference);
            break;
        case RisMode::Fixed:
            r = RisConfiguration::uniform(cfg);
            break;
        case RisMode::Random:
            r = RisConfiguration::random(cfg, policy.seed, policy.draws);
            break;
        }
        r.reference = policy.reference;
        return r;
    }

    std::vector<TimePoint> sweep_time(const ScenarioConfig &cfg, const std::vector<double> &t_grid,
                                      const SweepOptions &opts)
    {
        if (t_grid.empty())
            throw DomainError("time grid is empty");
        for (std::size_t i = 1; i < t_grid.size(); ++i)
            if (!(t_grid[i] > t_grid[i - 1]))
                throw DomainError("time grid must be strictly increasing");
        validate(cfg);

        const bool oracle = opts.spherical || opts.planar || opts.subarray;
        std::vector<TimePoint> out(t_grid.size());
        parallel_for(t_grid.size(), resolve_threads(opts.threads),
                     [&](std::size_t i)
                     {
                         const double t = t_grid[i];
                         TimePoint &pt = out[i];
                         pt.t = t;
                         const Partition part = partition_at(cfg, t);
                         pt.xi_min = part.xi_min;
                         pt.first_cols = part.first_cols;
                         pt.first_rows = part.first_rows;
                         pt.m_sub = part.counts.cols;
                         pt.n_sub = part.counts.rows;
                         pt.total = part.total();
                         pt.complexity = parameter_counts(cfg.ris_cols, cfg.ris_rows, pt.m_sub, pt.n_sub);
                         if (!oracle)
                             return;

                         const RisConfiguration ris = make_ris(cfg, opts.ris, t);
                         const auto syn = sweep_synthesis();
                         const ChannelSnapshot sph = timed(opts.timing, pt.wall_spherical_s,
                                                           [&] { return spherical_cir(cfg, ris, t, syn); });
                         if (opts.planar)
                         {
                             const ChannelSnapshot pl = timed(opts.timing, pt.wall_planar_s,
                                                              [&] { return planar_cir(cfg, ris, t, syn); });
                             pt.delta_planar_db = normalized_error(pl, sph);
                         }
                         if (opts.subarray)
                         {
                             const ChannelSnapshot sa = timed(opts.timing, pt.wall_subarray_s,
                                                              [&] { return subarray_cir(cfg, ris, part, t, syn); });
                             pt.delta_subarray_db = normalized_error(sa, sph);
                         }
                     });
        return out;
    }

    ScenarioConfig place_terminals(const ScenarioConfig &cfg, const Vec3 &uav_at, const Vec3 &mr_at)
    {
        if (mr_at.z() != 0.0)
            throw DomainError("MR target must lie on the ground (z = 0)");

        ScenarioConfig c = cfg;
        const Vec3 dt = uav_at - Vec3(0.0, 0.0, cfg.uav_init_height);
        const double vt = dt.norm();
        c.tx_velocity.speed = vt;
        c.tx_velocity.azimuth = vt > 0.0 ? std::atan2(dt.y(), dt.x()) : 0.0;
        c.tx_velocity.elevation = vt > 0.0 ? std::asin(std::clamp(dt.z() / vt, -1.0, 1.0)) : 0.0;

        const Vec3 dr = mr_at - Vec3(cfg.mr_init_x, 0.0, 0.0);
        const double vr = dr.norm();
        c.rx_velocity.speed = vr;
        c.rx_velocity.azimuth = vr > 0.0 ? std::atan2(dr.y(), dr.x()) : 0.0;

        c.doppler_reference = DopplerReference::Geometry;
        c.geometry_update = 0.0;
        return c;
    }

    std::vector<DimensionPoint> sweep_dimension(const ScenarioConfig &cfg, const std::vector<double> &sides,
                                                const Vec3 &uav_at, const Vec3 &mr_at, const SweepOptions &opts)
    {
        if (sides.empty())
            throw DomainError("dimension list is empty");
        const ScenarioConfig placed = place_terminals(cfg, uav_at, mr_at);
        constexpr double t = 1.0;

        std::vector<DimensionPoint> out(sides.size());
        parallel_for(sides.size(), resolve_threads(opts.threads),
                     [&](std::size_t i)
                     {
                         DimensionPoint &pt = out[i];
                         pt.side = sides[i];
                         if (!(sides[i] > 0.0) || !std::isfinite(sides[i]))
                             throw DomainError("RIS side length must be positive");

                         ScenarioConfig c = placed;
                         c.ris_cols = std::max(1, int(std::lround(sides[i] / c.unit_width)));
                         c.ris_rows = std::max(1, int(std::lround(sides[i] / c.unit_height)));
                         validate(c);
                         pt.ris_cols = c.ris_cols;
                         pt.ris_rows = c.ris_rows;

                         const Partition part = partition_at(c, t);
                         pt.m_sub = part.counts.cols;
                         pt.n_sub = part.counts.rows;

                         const RisConfiguration ris = make_ris(c, opts.ris, t);
                         const auto syn = sweep_synthesis();
                         const ChannelSnapshot sph = timed(opts.timing, pt.wall_spherical_s,
                                                           [&] { return spherical_cir(c, ris, t, syn); });
                         pt.delta_planar_db = normalized_error(planar_cir(c, ris, t, syn), sph);
                         pt.delta_subarray_db = normalized_error(subarray_cir(c, ris, part, t, syn), sph);
                     });
        return out;
    }
}
