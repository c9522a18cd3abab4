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

#include "oracles.hpp"

#include "risuav/config.hpp"
#include "risuav/errors.hpp"
#include "risuav/metrics.hpp"
#include "risuav/sweep.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace risuav;

namespace
{
    ScenarioConfig reduced_default()
    {
        return parse_scenario("ris.width_m = 1.0\nris.height_m = 0.7\n").scenario;
    }
}

TEST_SUITE("metrics")
{
    TEST_CASE("normalised error examples")
    {
        Eigen::MatrixXcd a(1, 1), b(1, 1);
        a(0, 0) = 2.0;
        b(0, 0) = 1.0;
        CHECK(normalized_error(a, b) == 0.0);
        CHECK(normalized_error(b, b) == kErrorFloorDb);

        Eigen::MatrixXcd ref(2, 2), test(2, 2);
        ref << Complex(1.0, 0.0), Complex(0.0, 2.0), Complex(-3.0, 0.0), Complex(0.5, 0.5);
        test = ref * 1.1;
        CHECK(normalized_error(test, ref) == doctest::Approx(10.0 * std::log10(0.4)).epsilon(1e-12));
        CHECK(normalized_error(test, ref) == doctest::Approx(-3.98).epsilon(1e-3));
    }

    TEST_CASE("error is scale-covariant in the deviation")
    {
        std::mt19937_64 rng(7);
        std::normal_distribution<double> g;
        for (int trial = 0; trial < 50; ++trial)
        {
            Eigen::MatrixXcd ref(3, 2), dev(3, 2);
            for (Eigen::Index i = 0; i < ref.size(); ++i)
            {
                ref(i) = {g(rng), g(rng)};
                dev(i) = {g(rng), g(rng)};
            }
            const double k = std::exp(oracle::uniform(rng, -3.0, 3.0));
            const double base = normalized_error(ref + dev, ref);
            CHECK(normalized_error(ref + k * dev, ref) == doctest::Approx(base + 10.0 * std::log10(k)).epsilon(1e-10));
        }
    }

    TEST_CASE("identical snapshots hit the floor")
    {
        ScenarioConfig c = reduced_default();
        c.ris_cols = 20;
        c.ris_rows = 14;
        const RisConfiguration ris = optimal_phases(c, unit_partition(c, 3.0), 3.0);
        const ChannelSnapshot s = subarray_cir(c, ris, partition_at(c, 3.0), 3.0);
        CHECK(normalized_error(s, s) == kErrorFloorDb);
        const AccuracyReport r = accuracy(s, s);
        CHECK(r.delta_db == kErrorFloorDb);
        CHECK(r.model_under_test == ChannelModel::SubArray);
        CHECK(r.time == 3.0);
    }

    TEST_CASE("error guards")
    {
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Ones(2, 2), b = Eigen::MatrixXcd::Ones(2, 3);
        CHECK_THROWS_AS(normalized_error(a, b), DimensionMismatchError);
        Eigen::MatrixXcd z = Eigen::MatrixXcd::Ones(2, 2);
        z(1, 0) = 0.0;
        CHECK_THROWS_AS(normalized_error(a, z), UndefinedBaselineError);
    }

    TEST_CASE("parameter counts")
    {
        const ComplexityReport r = parameter_counts(100, 100, 5, 5);
        CHECK(r.spherical_params == 70000);
        CHECK(r.planar_params == 20008);
        CHECK(r.subarray_params == 20200);
        CHECK(r.reduction_fraction == doctest::Approx(1.0 - 20200.0 / 70000.0).epsilon(1e-15));

        const ComplexityReport one = parameter_counts(1, 1, 1, 1);
        CHECK(one.spherical_params == 7);
        CHECK(one.planar_params == 10);
        CHECK(one.subarray_params == 10);

        const ComplexityReport big = parameter_counts(840, 560, 6, 8);
        CHECK(big.reduction_fraction == doctest::Approx(1.0 - 2.0 / 7.0).epsilon(1e-3));
        CHECK(parameter_counts(100000, 100000, 10, 10).spherical_params == 70000000000LL);

        CHECK_THROWS_AS(parameter_counts(0, 1, 1, 1), DomainError);
        CHECK_THROWS_AS(parameter_counts(1, 1, 1, -1), DomainError);
    }

    TEST_CASE("parameter count invariants")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 1000; ++trial)
        {
            const int M = oracle::uniform_int(rng, 1, 2000), N = oracle::uniform_int(rng, 1, 2000);
            const int ms = oracle::uniform_int(rng, 1, M), ns = oracle::uniform_int(rng, 1, N);
            const ComplexityReport r = parameter_counts(M, N, ms, ns);
            const std::int64_t MN = std::int64_t(M) * N;
            CHECK(r.spherical_params == 7 * MN);
            CHECK(r.planar_params == 2 * MN + 8);
            CHECK(r.subarray_params == 2 * MN + 8 * std::int64_t(ms) * ns);
            if (8 * std::int64_t(ms) * ns <= 5 * MN)
                CHECK(r.subarray_params <= r.spherical_params);
            CHECK(r.reduction_fraction == 1.0 - double(r.subarray_params) / double(r.spherical_params));
        }
    }
}

TEST_SUITE("sweeps")
{
    TEST_CASE("static terminals give a constant series")
    {
        ScenarioConfig c = reduced_default();
        c.ris_cols = 60;
        c.ris_rows = 42;
        c.tx_velocity.speed = 0.0;
        c.rx_velocity.speed = 0.0;
        SweepOptions opts;
        opts.planar = opts.subarray = true;
        opts.threads = 2;
        const auto points = sweep_time(c, {0.0, 1.0, 2.5, 7.0}, opts);
        REQUIRE(points.size() == 4);
        for (const auto &p : points)
        {
            CHECK(p.total == points[0].total);
            CHECK(p.xi_min == points[0].xi_min);
            CHECK(*p.delta_planar_db == *points[0].delta_planar_db);
            CHECK(*p.delta_subarray_db == *points[0].delta_subarray_db);
            CHECK(!p.wall_spherical_s);
        }
    }

    TEST_CASE("sweep rows mirror the partition")
    {
        const ScenarioConfig c = default_scenario().scenario;
        const std::vector<double> grid{0.0, 6.75, 13.5, 20.25, 27.0};
        const auto points = sweep_time(c, grid, {});
        REQUIRE(points.size() == grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            const Partition p = partition_at(c, grid[i]);
            CHECK(points[i].t == grid[i]);
            CHECK(points[i].total == p.total());
            CHECK(points[i].m_sub == p.counts.cols);
            CHECK(points[i].n_sub == p.counts.rows);
            CHECK(points[i].first_cols == p.first_cols);
            CHECK(points[i].xi_min == p.xi_min);
            const ComplexityReport r = parameter_counts(c.ris_cols, c.ris_rows, p.counts.cols, p.counts.rows);
            CHECK(points[i].complexity.subarray_params == r.subarray_params);
            CHECK(!points[i].delta_planar_db);
        }
    }

    TEST_CASE("planar error peaks near the closest approach")
    {
        ScenarioConfig c = reduced_default();
        c.tx_antennas = c.rx_antennas = 4;
        const std::vector<double> grid = time_grid(0.0, 27.0, 11);
        SweepOptions opts;
        opts.planar = true;
        const auto points = sweep_time(c, grid, opts);
        std::size_t closest = 0, worst = 0;
        for (std::size_t i = 1; i < points.size(); ++i)
        {
            if (points[i].xi_min < points[closest].xi_min)
                closest = i;
            if (*points[i].delta_planar_db > *points[worst].delta_planar_db)
                worst = i;
        }
        CHECK(std::abs(double(worst) - double(closest)) <= 1.0);
        CHECK(*points[worst].delta_planar_db > *points.front().delta_planar_db);
        CHECK(*points[worst].delta_planar_db > *points.back().delta_planar_db);
    }

    TEST_CASE("results do not depend on the worker count")
    {
        ScenarioConfig c = reduced_default();
        c.ris_cols = 80;
        c.ris_rows = 56;
        c.tx_antennas = c.rx_antennas = 2;
        SweepOptions opts;
        opts.planar = opts.subarray = true;
        const std::vector<double> grid = time_grid(8.0, 18.0, 5);
        opts.threads = 1;
        const auto one = sweep_time(c, grid, opts);
        opts.threads = 3;
        const auto three = sweep_time(c, grid, opts);
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            CHECK(one[i].total == three[i].total);
            CHECK(*one[i].delta_planar_db == *three[i].delta_planar_db);
            CHECK(*one[i].delta_subarray_db == *three[i].delta_subarray_db);
        }
    }

    TEST_CASE("first failing point wins")
    {
        const ScenarioConfig c = default_scenario().scenario;
        SweepOptions opts;
        opts.threads = 3;
        try
        {
            sweep_time(c, {-3.0, -2.0, -1.0, 0.0}, opts);
            FAIL("expected a DomainError");
        }
        catch (const DomainError &e)
        {
            CHECK(std::string(e.what()).find("-3.0") != std::string::npos);
        }
        CHECK_THROWS_AS(sweep_time(c, {}, opts), DomainError);
        CHECK_THROWS_AS(sweep_time(c, {1.0, 1.0}, opts), DomainError);
    }

    TEST_CASE("dimension sweep")
    {
        ScenarioConfig c = default_scenario().scenario;
        c.tx_antennas = c.rx_antennas = 4;
        const SweepSettings s;
        SweepOptions opts;
        opts.planar = opts.subarray = true;
        const double unit = c.unit_width;
        const auto points = sweep_dimension(c, {unit, 0.1, 0.4}, s.fixed_uav, s.fixed_mr, opts);
        REQUIRE(points.size() == 3);
        CHECK(points[0].ris_cols == 1);
        CHECK(points[0].ris_rows == 1);
        CHECK(points[0].delta_planar_db == kErrorFloorDb);
        CHECK(points[0].delta_subarray_db == kErrorFloorDb);
        for (const auto &p : points)
        {
            CHECK(p.m_sub * p.n_sub == 1);
            CHECK(p.delta_planar_db == p.delta_subarray_db);
        }
        CHECK(points[1].ris_cols == std::lround(0.1 / unit));
        CHECK(points[2].delta_planar_db > points[1].delta_planar_db);

        const ScenarioConfig placed = place_terminals(c, s.fixed_uav, s.fixed_mr);
        const TerminalPositions at = terminal_positions(placed, 1.0);
        CHECK((at.tx - s.fixed_uav).norm() < 1e-9);
        CHECK((at.rx - s.fixed_mr).norm() < 1e-9);
        CHECK_THROWS_AS(place_terminals(c, s.fixed_uav, Vec3(250.0, 10.0, 1.0)), DomainError);
        CHECK_THROWS_AS(sweep_dimension(c, {0.5, -1.0}, s.fixed_uav, s.fixed_mr, opts), DomainError);
    }

    TEST_CASE("ris policy")
    {
        ScenarioConfig c = reduced_default();
        c.ris_cols = 10;
        c.ris_rows = 6;
        RisPolicy policy;
        const RisConfiguration opt = make_ris(c, policy, 2.0);
        const RisConfiguration direct = optimal_phases(c, unit_partition(c, 2.0), 2.0);
        CHECK(opt.phases == direct.phases);
        policy.mode = RisMode::Random;
        policy.seed = 9;
        CHECK(make_ris(c, policy, 2.0).phases == make_ris(c, policy, 5.0).phases);
        CHECK(make_ris(c, policy, 2.0).mode == RisMode::Random);
        policy.mode = RisMode::Fixed;
        const RisConfiguration zero = make_ris(c, policy, 2.0);
        CHECK(std::all_of(zero.phases.begin(), zero.phases.end(), [](double p) { return p == 0.0; }));
    }

    TEST_CASE("thread resolution")
    {
        CHECK(resolve_threads(5) == 5);
        CHECK(resolve_threads(0) >= 1);
    }
}
