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


#ifndef SCLINK_HARNESS_SWEEP_HPP
#define SCLINK_HARNESS_SWEEP_HPP

#include "sclink/harness/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sclink::harness
{

struct SweepRow
{
    double axis = 0.0;
    double ase_mean = 0.0;
    double ase_stderr = 0.0;
    double mi_mean = 0.0;
    std::size_t singular_bins = 0; // realizations aborted by a singular FDE bin
    double seconds = 0.0;
};

struct SweepResult
{
    Axis axis = Axis::Distance;
    std::vector<SweepRow> rows;
};

// Link configuration at one grid value
ase::LinkConfig point_config(const ExperimentConfig &cfg, double value);

// Seed used at grid index i
std::uint64_t point_seed(const ExperimentConfig &cfg, std::size_t i);

SweepResult run_sweep(const ExperimentConfig &cfg);

// Header `axis,ase_mean,ase_stderr,mi_mean,singular_bins,seconds`, 9 significant digits
void write_csv(std::ostream &os, const SweepResult &result);
void emit_csv(const SweepResult &result, const std::string &path);
std::vector<SweepRow> read_csv(std::istream &is);
std::vector<SweepRow> read_csv(const std::string &path);

} // namespace sclink::harness

#endif
