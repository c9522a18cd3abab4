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

#ifndef RISUAV_ERRORS_HPP
#define RISUAV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace risuav
{
    // Base of everything the library throws on a modelling failure.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Argument outside its documented domain (antenna index, negative time, ...)
    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    // A terminal coincides with a RIS point or sits on the vertical through it.
    class DegenerateGeometryError : public Error
    {
    public:
        using Error::Error;
    };

    // Terminal closer than the Rayleigh distance of a single reflecting unit.
    class NearFieldLimitError : public Error
    {
    public:
        using Error::Error;
    };

    // A terminal lies behind the reflecting face (cos of incidence/emergence <= 0).
    class BackIlluminationError : public Error
    {
    public:
        using Error::Error;
    };

    // Normalisation undefined: all amplitudes zero or a vanishing pair sum.
    class ZeroChannelError : public Error
    {
    public:
        using Error::Error;
    };

    // Error metric baseline has a zero entry.
    class UndefinedBaselineError : public Error
    {
    public:
        using Error::Error;
    };

    class DimensionMismatchError : public Error
    {
    public:
        using Error::Error;
    };

    // Scenario parameters violate a physical invariant.
    class ValidationError : public Error
    {
    public:
        using Error::Error;
    };

    // Malformed scenario file; carries the offending line (0 when not line-specific).
    class ConfigError : public Error
    {
    public:
        ConfigError(std::size_t line, const std::string &message)
            : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

        std::size_t line() const noexcept { return line_; }

    private:
        std::size_t line_;
    };

    // Bad command-line input (mapped to exit code 2 by the CLI).
    class UsageError : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
