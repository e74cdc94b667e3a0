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


#include "sclink/txrx.hpp"

#include "sclink/errors.hpp"
#include "sclink/rng.hpp"

#include <cmath>
#include <string>

namespace sclink::txrx
{

Constellation qam(int order)
{
    if (order != 4 && order != 16 && order != 64)
        throw ContractViolation("qam: order must be 4, 16 or 64, got " + std::to_string(order));

    Constellation c;
    c.order = order;
    c.bits = static_cast<int>(std::lround(std::log2(order)));
    const int side = static_cast<int>(std::lround(std::sqrt(order)));
    const int half_bits = c.bits / 2;
    const double scale = std::sqrt(3.0 / (2.0 * (order - 1)));

    // Gray-decode each half of the label to a PAM level index
    auto level = [](unsigned g)
    {
        unsigned b = g;
        for (unsigned s = g >> 1; s; s >>= 1)
            b ^= s;
        return static_cast<int>(b);
    };

    c.points.resize(order);
    for (int label = 0; label < order; ++label)
    {
        const int li = level(static_cast<unsigned>(label) >> half_bits);
        const int lq = level(static_cast<unsigned>(label) & ((1u << half_bits) - 1));
        c.points[label] = scale * cdouble(2 * li - (side - 1), 2 * lq - (side - 1));
    }
    return c;
}

SymbolBlock map_symbols(const std::vector<std::uint32_t> &indices, const Constellation &c, double pt, std::size_t m)
{
    if (m == 0 || indices.size() % m != 0)
        throw ContractViolation("map_symbols: index count must be a multiple of M");
    if (!(pt >= 0.0))
        throw ContractViolation("map_symbols: transmit power must be non-negative");

    SymbolBlock b;
    b.m = m;
    b.k = indices.size() / m;
    b.s.resize(static_cast<Eigen::Index>(indices.size()));
    const double amp = std::sqrt(pt / static_cast<double>(m));
    for (std::size_t i = 0; i < indices.size(); ++i)
    {
        if (indices[i] >= c.points.size())
            throw ContractViolation("map_symbols: label out of range");
        b.s[static_cast<Eigen::Index>(i)] = amp * c.points[indices[i]];
    }
    return b;
}

std::vector<std::uint32_t> random_indices(std::size_t count, const Constellation &c, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<std::uint32_t> out(count);
    for (auto &v : out)
        v = static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(c.order)));
    return out;
}

std::size_t strongest_tap(const MatrixSequence &composite)
{
    if (composite.empty())
        throw ContractViolation("strongest_tap: empty channel");
    std::size_t eta = 0;
    double best = composite[0].squaredNorm();
    for (std::size_t l = 1; l < composite.size(); ++l)
    {
        const double v = composite[l].squaredNorm();
        if (v > best)
        {
            best = v;
            eta = l;
        }
    }
    return eta;
}

PrecoderPair select_precoders(const MatrixSequence &composite, std::size_t m)
{
    const std::size_t eta = strongest_tap(composite);
    const ComplexMatrix &h = composite[eta];
    const auto rank_max = static_cast<std::size_t>(std::min(h.rows(), h.cols()));
    if (m == 0 || m > rank_max)
        throw ContractViolation("select_precoders: M must lie in [1, min(N_T, N_R)]");

    const auto dec = numerics::svd(h);
    const auto mi = static_cast<Eigen::Index>(m);
    if (!(dec.singular[0] > 0.0) || dec.singular[mi - 1] <= 1e-12 * dec.singular[0])
        throw RankDeficiencyError("select_precoders: strongest tap has rank below M=" + std::to_string(m));

    PrecoderPair pp;
    pp.eta = eta;
    pp.q = dec.right.leftCols(mi);
    pp.d = dec.left.leftCols(mi);
    return pp;
}

ComplexMatrix apply_precoder(const SymbolBlock &block, const ComplexMatrix &q)
{
    if (static_cast<std::size_t>(q.cols()) != block.m)
        throw ContractViolation("apply_precoder: Q must have M columns");
    return q * block.vectors();
}

} // namespace sclink::txrx
