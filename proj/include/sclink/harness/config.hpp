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


#ifndef SCLINK_HARNESS_CONFIG_HPP
#define SCLINK_HARNESS_CONFIG_HPP

#include "sclink/ase.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sclink::harness
{

enum class Axis
{
    Distance, // meters
    Power     // P_T in dBW
};

std::string to_string(Axis axis);
Axis axis_from_string(const std::string &name);

struct ExperimentConfig
{
    ase::LinkConfig link;
    Axis axis = Axis::Distance;
    std::vector<double> grid{10.0, 30.0, 100.0, 200.0, 500.0};
    std::size_t realizations = 50;
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    bool common_random_numbers = true; // every grid point reuses the master seed
    bool record_time = true;           // false writes 0 in the seconds column
};

// Throws ConfigError for an empty or unsorted grid and unsatisfiable link parameters
void validate(const ExperimentConfig &cfg);

// Nested sections: link, pulse, channel, noise, tde, fde, mi, monte_carlo, sweep, plus seed, workers,
// record_time. Missing keys keep their defaults, unknown keys are rejected with ConfigError.
ExperimentConfig config_from_json(const nlohmann::json &j);
ExperimentConfig load_config(const std::string &path);
nlohmann::json to_json(const ExperimentConfig &cfg);

} // namespace sclink::harness

#endif
