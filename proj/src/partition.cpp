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

#include "risuav/partition.hpp"
#include "risuav/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace risuav
{
    namespace
    {
        // Rayleigh distance of `units` units of size d
        double rayleigh(int units, double d, double lambda)
        {
            const double aperture = double(units) * d;
            return 2.0 * aperture * aperture / lambda;
        }

        // floor(sqrt(λ ξ / (2 d²))), settled against the inequality itself so that
        // rounding at perfect squares cannot break maximality.
        int max_far_field_units(double d, double lambda, double xi_min, int cap)
        {
            const double estimate = std::floor(std::sqrt(lambda * xi_min / (2.0 * d * d)));
            int n = estimate >= double(cap) ? cap : int(estimate);
            while (n > 0 && rayleigh(n, d, lambda) > xi_min)
                --n;
            while (n < cap && rayleigh(n + 1, d, lambda) <= xi_min)
                ++n;
            return n;
        }
    }

    SubArraySize first_subarray_size(const ScenarioConfig &cfg, double xi_min)
    {
        if (!(xi_min > 0.0) || !std::isfinite(xi_min))
            throw DomainError("xi_min must be positive and finite");

        const double lambda = cfg.carrier_wavelength;
        const int cols = max_far_field_units(cfg.unit_width, lambda, xi_min, cfg.ris_cols);
        const int rows = max_far_field_units(cfg.unit_height, lambda, xi_min, cfg.ris_rows);
        if (cols < 1 || rows < 1)
            throw NearFieldLimitError("terminal within the Rayleigh distance of a single unit (xi_min = " +
                                      std::to_string(xi_min) + " m)");

        return {cols, rows};
    }

    SubArrayCounts subarray_counts(int M, int N, int first_cols, int first_rows)
    {
        if (first_cols < 1 || first_cols > M || first_rows < 1 || first_rows > N)
            throw DomainError("first sub-array size outside [1, M] x [1, N]");

        auto count = [](int total, int first)
        {
            const int rem = total % first;
            return rem != 0 ? (total - rem) / first + 1 : total / first;
        };
        return {count(M, first_cols), count(N, first_rows)};
    }

    int subarray_size_at(int total, int first, int count, int index)
    {
        if (index < 1 || index > count)
            throw DomainError("sub-array index " + std::to_string(index) + " outside [1, " + std::to_string(count) + "]");
        return index < count ? first : total - (count - 1) * first;
    }

    SubArrayCenter subarray_center(const ScenarioConfig &cfg, int m_sub, int n_sub,
                                   int first_cols, int first_rows, int cols_at, int rows_at)
    {
        SubArrayCenter c;
        c.a3 = 0.5 * double(2 * (m_sub - 1) * first_cols + cols_at - cfg.ris_cols) * cfg.unit_width;
        c.a4 = 0.5 * double(2 * (n_sub - 1) * first_rows + rows_at - cfg.ris_rows) * cfg.unit_height;
        c.center = ris_point(cfg, c.a3, c.a4);
        return c;
    }

    Partition make_partition(const ScenarioConfig &cfg, double t, int first_cols, int first_rows)
    {
        Partition p;
        p.time = t;
        p.first_cols = first_cols;
        p.first_rows = first_rows;
        p.counts = subarray_counts(cfg.ris_cols, cfg.ris_rows, first_cols, first_rows);

        p.col_sizes.resize(std::size_t(p.counts.cols));
        p.col_offsets.resize(std::size_t(p.counts.cols));
        for (int m = 1; m <= p.counts.cols; ++m)
        {
            const int size = subarray_size_at(cfg.ris_cols, first_cols, p.counts.cols, m);
            p.col_sizes[std::size_t(m - 1)] = size;
            p.col_offsets[std::size_t(m - 1)] = subarray_center(cfg, m, 1, first_cols, first_rows, size, first_rows).a3;
        }

        p.row_sizes.resize(std::size_t(p.counts.rows));
        p.row_offsets.resize(std::size_t(p.counts.rows));
        for (int n = 1; n <= p.counts.rows; ++n)
        {
            const int size = subarray_size_at(cfg.ris_rows, first_rows, p.counts.rows, n);
            p.row_sizes[std::size_t(n - 1)] = size;
            p.row_offsets[std::size_t(n - 1)] = subarray_center(cfg, 1, n, first_cols, first_rows, first_cols, size).a4;
        }
        return p;
    }

    Partition partition_at(const ScenarioConfig &cfg, double t)
    {
        const double xi = min_terminal_distance(cfg, geometry_time(cfg, t));
        const SubArraySize first = first_subarray_size(cfg, xi);
        Partition p = make_partition(cfg, t, first.cols, first.rows);
        p.xi_min = xi;
        return p;
    }

    Partition unit_partition(const ScenarioConfig &cfg, double t)
    {
        return make_partition(cfg, t, 1, 1);
    }

    Partition single_partition(const ScenarioConfig &cfg, double t)
    {
        return make_partition(cfg, t, cfg.ris_cols, cfg.ris_rows);
    }
}
