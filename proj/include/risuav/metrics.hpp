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

#ifndef RISUAV_METRICS_HPP
#define RISUAV_METRICS_HPP

#include "risuav/channel.hpp"

#include <cstdint>

namespace risuav
{
    // Reported in place of -inf when the test channel matches the oracle exactly [dB]
    inline constexpr double kErrorFloorDb = -300.0;

    // 10 log10 Σ_pq |h_pq - h^sph_pq| / |h^sph_pq| over aggregate gains, floored at kErrorFloorDb.
    // Throws DimensionMismatchError on shape mismatch, UndefinedBaselineError on a zero oracle entry.
    double normalized_error(const Eigen::MatrixXcd &test, const Eigen::MatrixXcd &oracle);
    double normalized_error(const ChannelSnapshot &test, const ChannelSnapshot &oracle);

    struct AccuracyReport
    {
        double time = 0.0;
        double delta_db = 0.0;
        ChannelModel model_under_test = ChannelModel::SubArray;
    };

    AccuracyReport accuracy(const ChannelSnapshot &test, const ChannelSnapshot &oracle);

    // Distance and angle parameters needed by each model.
    struct ComplexityReport
    {
        std::int64_t spherical_params = 0; // 7 M N
        std::int64_t planar_params = 0;    // 2 M N + 8
        std::int64_t subarray_params = 0;  // 2 M N + 8 M_sub N_sub
        double reduction_fraction = 0.0;   // 1 - subarray / spherical
    };

    ComplexityReport parameter_counts(std::int64_t M, std::int64_t N, std::int64_t M_sub, std::int64_t N_sub);
}

#endif
