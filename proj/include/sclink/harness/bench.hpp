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


#ifndef SCLINK_HARNESS_BENCH_HPP
#define SCLINK_HARNESS_BENCH_HPP

#include <json.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace sclink::harness
{

// Receiver processing of one quasi-static frame of n_blocks blocks of k vector symbols, equalizer
// construction included, on a random N x N composite channel of composite_len taps.
struct BenchConfig
{
    std::size_t n = 10;
    std::size_t m = 4;
    std::size_t k = 1024;
    std::size_t composite_len = 12;
    std::size_t n_blocks = 8;
    std::size_t repeats = 7; // best-of timing
    std::uint64_t seed = 1;
    // P~ M values for the TDE build fit; below ~1000 the factorization is not yet in its cubic regime
    std::vector<std::size_t> build_sizes{1024, 2048, 4096};
};

struct BenchReport
{
    double tde_seconds = 0.0;
    double fde_seconds = 0.0;
    double tde_ops = 0.0; // complex multiply-accumulate estimates
    double fde_ops = 0.0;
    std::vector<std::pair<double, double>> tde_build; // (P~ M, seconds)
    double tde_build_exponent = 0.0;
    double fde_k_ratio = 0.0; // FDE time at 2k over time at k
};

double time_tde(const BenchConfig &cfg);
double time_fde(const BenchConfig &cfg);
double tde_ops(const BenchConfig &cfg);
double fde_ops(const BenchConfig &cfg);

// Best-of timing of the TDE equalizer build alone at stacked dimension size = P~ M
double time_tde_build(std::size_t m, std::size_t size, std::size_t repeats, std::uint64_t seed);

// Least-squares slope of log(seconds) against log(size)
double loglog_slope(const std::vector<std::pair<double, double>> &points);

BenchReport benchmark(const BenchConfig &cfg);
nlohmann::json to_json(const BenchReport &report);

} // namespace sclink::harness

#endif
