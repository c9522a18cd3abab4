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

#ifndef RISUAV_PARTITION_HPP
#define RISUAV_PARTITION_HPP

#include "risuav/geometry.hpp"

#include <vector>

namespace risuav
{
    struct SubArraySize
    {
        int cols = 1;
        int rows = 1;
    };

    struct SubArrayCounts
    {
        int cols = 1; // M_sub
        int rows = 1; // N_sub
    };

    struct SubArrayCenter
    {
        Vec3 center;
        double a3 = 0.0; // column offset of the centre from the RIS centre [m]
        double a4 = 0.0; // row offset (downwards) [m]
    };

    // Uniform-with-remainder tiling of the RIS at one instant. Sub-array (m_sub, n_sub)
    // is 1-based; the remainder sits in the last column/row of sub-arrays.
    struct Partition
    {
        double time = 0.0;
        double xi_min = 0.0; // distance the sizing was based on (0 for forced partitions)
        int first_cols = 1;  // M^col of the first sub-array
        int first_rows = 1;  // N^row of the first sub-array
        SubArrayCounts counts;
        std::vector<int> col_sizes;    // M^col_{m_sub}, length counts.cols
        std::vector<int> row_sizes;    // N^row_{n_sub}, length counts.rows
        std::vector<double> col_offsets; // A3 per m_sub
        std::vector<double> row_offsets; // A4 per n_sub

        int total() const { return counts.cols * counts.rows; }
        int cols_at(int m_sub) const { return col_sizes.at(std::size_t(m_sub - 1)); }
        int rows_at(int n_sub) const { return row_sizes.at(std::size_t(n_sub - 1)); }
        double a3(int m_sub) const { return col_offsets.at(std::size_t(m_sub - 1)); }
        double a4(int n_sub) const { return row_offsets.at(std::size_t(n_sub - 1)); }

        // Global 1-based unit index of local unit m0 / n0 in sub-array m_sub / n_sub.
        int unit_col(int m_sub, int m0) const { return (m_sub - 1) * first_cols + m0; }
        int unit_row(int n_sub, int n0) const { return (n_sub - 1) * first_rows + n0; }
    };

    // Largest sub-array that keeps both terminals in its far field (Rayleigh
    // distance <= xi_min) per dimension, clamped to the RIS size.
    // Throws NearFieldLimitError when not even a single unit qualifies.
    SubArraySize first_subarray_size(const ScenarioConfig &cfg, double xi_min);

    SubArrayCounts subarray_counts(int M, int N, int first_cols, int first_rows);

    // Size of the index-th sub-array (1-based) along one dimension.
    int subarray_size_at(int total, int first, int count, int index);

    SubArrayCenter subarray_center(const ScenarioConfig &cfg, int m_sub, int n_sub,
                                   int first_cols, int first_rows, int cols_at, int rows_at);

    // Partition with a prescribed first sub-array size.
    Partition make_partition(const ScenarioConfig &cfg, double t, int first_cols, int first_rows);

    // Rayleigh-sized partition from ξ_min at the geometry instant of t.
    Partition partition_at(const ScenarioConfig &cfg, double t);

    // Every unit is its own sub-array (spherical wavefront degenerate).
    Partition unit_partition(const ScenarioConfig &cfg, double t);

    // The whole RIS is one sub-array (planar wavefront degenerate).
    Partition single_partition(const ScenarioConfig &cfg, double t);
}

#endif
