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

#include "risuav/csv.hpp"
#include "risuav/errors.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <system_error>

namespace risuav
{
    namespace
    {
        std::string quote(const std::string &cell)
        {
            if (cell.find_first_of(",\"\r\n") == std::string::npos)
                return cell;
            std::string out = "\"";
            for (char c : cell)
            {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + '"';
        }
    }

    std::string format_real(double x)
    {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
        if (ec != std::errc())
            throw Error("cannot format number");
        return std::string(buf, ptr);
    }

    std::string format_real(const std::optional<double> &x)
    {
        return x ? format_real(*x) : std::string();
    }

    std::string format_int(std::int64_t x)
    {
        return std::to_string(x);
    }

    std::string to_csv(const CsvTable &table)
    {
        std::string out;
        auto line = [&](const std::vector<std::string> &cells)
        {
            for (std::size_t i = 0; i < cells.size(); ++i)
            {
                if (i)
                    out += ',';
                out += quote(cells[i]);
            }
            out += "\r\n";
        };
        line(table.header);
        for (const auto &r : table.rows)
            line(r);
        return out;
    }

    void write_csv(const std::string &path, const CsvTable &table)
    {
        namespace fs = std::filesystem;
        const fs::path target(path);
        const fs::path tmp = target.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw Error("cannot open '" + tmp.string() + "' for writing");
            out << to_csv(table);
            out.flush();
            if (!out)
            {
                out.close();
                std::error_code ignore;
                fs::remove(tmp, ignore);
                throw Error("failed writing '" + tmp.string() + "'");
            }
        }
        std::error_code ec;
        fs::rename(tmp, target, ec);
        if (ec)
        {
            std::error_code ignore;
            fs::remove(tmp, ignore);
            throw Error("cannot rename '" + tmp.string() + "' to '" + target.string() + "': " + ec.message());
        }
    }
}
