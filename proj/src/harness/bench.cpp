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


#include "sclink/harness/bench.hpp"

#include "sclink/errors.hpp"
#include "sclink/fde.hpp"
#include "sclink/rng.hpp"
#include "sclink/tde.hpp"
#include "sclink/txrx.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace sclink::harness
{

namespace
{

MatrixSequence random_taps(std::size_t count, Eigen::Index rows, Eigen::Index cols, std::uint64_t seed)
{
    Rng rng(seed);
    MatrixSequence taps(count, ComplexMatrix(rows, cols));
    for (auto &t : taps)
        for (Eigen::Index i = 0; i < t.size(); ++i)
            t.data()[i] = rng.complex_normal(1.0);
    return taps;
}

ComplexMatrix random_symbols(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed)
{
    const auto c = txrx::qam(4);
    const auto labels = txrx::random_indices(static_cast<std::size_t>(rows * cols), c, seed);
    ComplexMatrix s(rows, cols);
    for (Eigen::Index i = 0; i < s.size(); ++i)
        s.data()[i] = c.points[labels[static_cast<std::size_t>(i)]];
    return s;
}

template <typename Fn>
double best_of(std::size_t repeats, Fn &&fn)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r)
    {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

struct Frame
{
    MatrixSequence h;
    txrx::PrecoderPair pp;
    ComplexMatrix y;
};

constexpr double bench_noise = 1e-2;

// Keeps the timed results observable so the work is not optimized away
volatile double g_sink = 0.0;

void check(const BenchConfig &cfg)
{
    if (cfg.m == 0 || cfg.m > cfg.n || cfg.composite_len == 0 || cfg.k < cfg.composite_len || cfg.n_blocks == 0)
        throw ContractViolation("benchmark: need 1 <= M <= N and 1 <= P~ <= k");
}

Frame make_frame(const BenchConfig &cfg, bool cyclic)
{
    check(cfg);
    const auto n = static_cast<Eigen::Index>(cfg.n), m = static_cast<Eigen::Index>(cfg.m);
    const auto k = static_cast<Eigen::Index>(cfg.k);
    Frame f;
    f.h = random_taps(cfg.composite_len, n, n, derive_seed(cfg.seed, {1}));
    f.pp = txrx::select_precoders(f.h, cfg.m);
    const ComplexMatrix s = random_symbols(m, k * static_cast<Eigen::Index>(cfg.n_blocks), derive_seed(cfg.seed, {2}));
    ComplexMatrix x;
    if (cyclic)
    {
        const auto c = static_cast<Eigen::Index>(cfg.composite_len - 1);
        x.resize(m, (k + c) * static_cast<Eigen::Index>(cfg.n_blocks));
        for (std::size_t b = 0; b < cfg.n_blocks; ++b)
            x.middleCols(static_cast<Eigen::Index>(b) * (k + c), k + c) =
                fde::add_cp(s.middleCols(static_cast<Eigen::Index>(b) * k, k), std::max<std::size_t>(cfg.composite_len - 1, 1));
    }
    else
        x = s;
    f.y = tde::channel_pass(f.pp.q * x, f.h, bench_noise, derive_seed(cfg.seed, {3}));
    return f;
}

} // namespace

double time_tde(const BenchConfig &cfg)
{
    const Frame f = make_frame(cfg, false);
    const std::size_t len = cfg.k * cfg.n_blocks;
    double sink = 0.0;
    const double t = best_of(cfg.repeats,
                             [&]
                             {
                                 const ComplexMatrix r = tde::postcode(f.y, f.pp.d);
                                 const auto eq = tde::build_lmmse(f.h, f.pp.q, f.pp.d, bench_noise, 1.0, cfg.m);
                                 const ComplexMatrix s = tde::equalize(r, eq, len);
                                 sink += std::abs(s(0, 0));
                             });
    g_sink = sink;
    return t;
}

double time_fde(const BenchConfig &cfg)
{
    const Frame f = make_frame(cfg, true);
    const std::size_t c = std::max<std::size_t>(cfg.composite_len - 1, 1);
    double sink = 0.0;
    const double t = best_of(cfg.repeats,
                             [&]
                             {
                                 const auto eq = fde::build_fde(f.h, f.pp.q, f.pp.d, cfg.k);
                                 const ComplexMatrix s = fde::fde_receive(f.y, f.pp.d, eq, c, cfg.n_blocks);
                                 sink += std::abs(s(0, 0));
                             });
    g_sink = sink;
    return t;
}

double tde_ops(const BenchConfig &cfg)
{
    const double n = cfg.n, m = cfg.m, p = cfg.composite_len, l = cfg.k * cfg.n_blocks, pm = p * m;
    return n * m * l + p * (n * n * m + n * m * m) + 0.5 * p * p * m * m * m + pm * pm * pm / 6.0 + pm * pm * m +
           l * p * m * m;
}

double fde_ops(const BenchConfig &cfg)
{
    const double n = cfg.n, m = cfg.m, p = cfg.composite_len, k = cfg.k, nb = cfg.n_blocks, lg = std::log2(k);
    return n * m * k * nb + p * (n * n * m + n * m * m) + 0.5 * m * m * k * lg + k * m * m * m +
           nb * (m * k * lg + k * m * m);
}

double time_tde_build(std::size_t m, std::size_t size, std::size_t repeats, std::uint64_t seed)
{
    if (m == 0 || size < m)
        throw ContractViolation("time_tde_build: size must be at least M");
    const std::size_t depth = size / m;
    const auto mm = static_cast<Eigen::Index>(m);
    const MatrixSequence g = random_taps(depth, mm, mm, seed);
    double sink = 0.0;
    const double t = best_of(repeats,
                             [&]
                             {
                                 const auto eq = tde::build_lmmse(g, 1.0, 1.0);
                                 sink += std::abs(eq.e(0, 0));
                             });
    g_sink = sink;
    return t;
}

double loglog_slope(const std::vector<std::pair<double, double>> &points)
{
    if (points.size() < 2)
        throw ContractViolation("loglog_slope: need at least two points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto &[x, y] : points)
    {
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(points.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BenchReport benchmark(const BenchConfig &cfg)
{
    BenchReport rep;
    rep.tde_seconds = time_tde(cfg);
    rep.fde_seconds = time_fde(cfg);
    rep.tde_ops = tde_ops(cfg);
    rep.fde_ops = fde_ops(cfg);

    for (std::size_t size : cfg.build_sizes)
        rep.tde_build.emplace_back(static_cast<double>(size),
                                   time_tde_build(cfg.m, size, std::max<std::size_t>(cfg.repeats / 2, 2),
                                                  derive_seed(cfg.seed, {4, size})));
    rep.tde_build_exponent = loglog_slope(rep.tde_build);

    BenchConfig doubled = cfg;
    doubled.k = 2 * cfg.k;
    rep.fde_k_ratio = time_fde(doubled) / rep.fde_seconds;
    return rep;
}

nlohmann::json to_json(const BenchReport &r)
{
    nlohmann::json build = nlohmann::json::array();
    for (const auto &[size, seconds] : r.tde_build)
        build.push_back({{"size", size}, {"seconds", seconds}});
    return {{"tde_seconds", r.tde_seconds},   {"fde_seconds", r.fde_seconds},
            {"tde_ops", r.tde_ops},           {"fde_ops", r.fde_ops},
            {"tde_build", build},             {"tde_build_exponent", r.tde_build_exponent},
            {"fde_k_ratio", r.fde_k_ratio}};
}

} // namespace sclink::harness
