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

#include "risuav/metrics.hpp"
#include "risuav/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace risuav
{
    double normalized_error(const Eigen::MatrixXcd &test, const Eigen::MatrixXcd &oracle)
    {
        if (test.rows() != oracle.rows() || test.cols() != oracle.cols())
            throw DimensionMismatchError("error metric: " + std::to_string(test.rows()) + " x " +
                                         std::to_string(test.cols()) + " against " + std::to_string(oracle.rows()) +
                                         " x " + std::to_string(oracle.cols()));

        double sum = 0.0;
        for (Eigen::Index p = 0; p < oracle.cols(); ++p)
            for (Eigen::Index q = 0; q < oracle.rows(); ++q)
            {
                const double base = std::abs(oracle(q, p));
                if (base == 0.0)
                    throw UndefinedBaselineError("oracle gain is zero for pair (" + std::to_string(p + 1) + ", " +
                                                 std::to_string(q + 1) + ")");
                sum += std::abs(test(q, p) - oracle(q, p)) / base;
            }
        if (sum == 0.0)
            return kErrorFloorDb;
        return std::max(10.0 * std::log10(sum), kErrorFloorDb);
    }

    double normalized_error(const ChannelSnapshot &test, const ChannelSnapshot &oracle)
    {
        return normalized_error(test.aggregate, oracle.aggregate);
    }

    AccuracyReport accuracy(const ChannelSnapshot &test, const ChannelSnapshot &oracle)
    {
        return {test.time, normalized_error(test, oracle), test.model};
    }

    ComplexityReport parameter_counts(std::int64_t M, std::int64_t N, std::int64_t M_sub, std::int64_t N_sub)
    {
        if (M < 1 || N < 1 || M_sub < 1 || N_sub < 1)
            throw DomainError("parameter counts need positive dimensions");

        ComplexityReport r;
        r.spherical_params = 7 * M * N;
        r.planar_params = 2 * M * N + 8;
        r.subarray_params = 2 * M * N + 8 * M_sub * N_sub;
        r.reduction_fraction = 1.0 - double(r.subarray_params) / double(r.spherical_params);
        return r;
    }
}
