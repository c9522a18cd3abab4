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

#ifndef RISUAV_CSV_HPP
#define RISUAV_CSV_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace risuav
{
    struct CsvTable
    {
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;
    };

    // 17 significant digits, shortest exponent form.
    std::string format_real(double x);
    std::string format_real(const std::optional<double> &x); // empty cell when absent
    std::string format_int(std::int64_t x);

    std::string to_csv(const CsvTable &table);

    // Writes to a sibling temporary file, then renames over `path`.
    void write_csv(const std::string &path, const CsvTable &table);
}

#endif
