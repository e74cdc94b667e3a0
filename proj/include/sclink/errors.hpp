// SPDX-License-Identifier: Apache-2.0
//
// sclink - link-level simulator for MIMO millimeter-wave single-carrier links
// Copyright (C) 2026 The sclink authors
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

#ifndef SCLINK_ERRORS_HPP
#define SCLINK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sclink
{

// Base of all simulator errors. kind() is a stable, machine-readable tag used by the CLI.
class Error : public std::runtime_error
{
public:
    Error(std::string kind, const std::string &what) : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string &kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Precondition violated by the caller (dimension mismatch, out-of-range parameter).
class ContractViolation : public Error
{
public:
    explicit ContractViolation(const std::string &what) : Error("contract_violation", what) {}
};

// Non positive-definite or numerically singular system (condition number above 1e12).
class SingularSystemError : public Error
{
public:
    explicit SingularSystemError(const std::string &what) : Error("singular_system", what) {}
};

// A frequency bin of the zero-forcing equalizer cannot be inverted.
class SingularBinError : public Error
{
public:
    SingularBinError(std::size_t bin, const std::string &what) : Error("singular_bin", what), bin_(bin) {}
    std::size_t bin() const noexcept { return bin_; }

private:
    std::size_t bin_;
};

class RankDeficiencyError : public Error
{
public:
    explicit RankDeficiencyError(const std::string &what) : Error("rank_deficiency", what) {}
};

class InsufficientDataError : public Error
{
public:
    explicit InsufficientDataError(const std::string &what) : Error("insufficient_data", what) {}
};

// The spectrum never falls below the requested out-of-band threshold.
class MeasurementError : public Error
{
public:
    explicit MeasurementError(const std::string &what) : Error("measurement", what) {}
};

// Input outside the validity range of a propagation model (e.g. distance below the 1 m anchor).
class OutOfModelError : public Error
{
public:
    explicit OutOfModelError(const std::string &what) : Error("out_of_model", what) {}
};

class ConfigError : public Error
{
public:
    explicit ConfigError(const std::string &what) : Error("config", what) {}
};

} // namespace sclink

#endif
