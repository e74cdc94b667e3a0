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


#ifndef SCLINK_TXRX_HPP
#define SCLINK_TXRX_HPP

#include "sclink/numerics.hpp"

#include <cstdint>
#include <vector>

namespace sclink::txrx
{

// Square QAM with Gray labels. points[label] has unit average energy.
struct Constellation
{
    int order = 4;
    int bits = 2;
    std::vector<cdouble> points;
};

// order in {4, 16, 64}; throws ContractViolation otherwise
Constellation qam(int order);

// L = k M symbols; vector symbol n is s[n M .. n M + M - 1]
struct SymbolBlock
{
    ComplexVector s;
    std::size_t k = 0;
    std::size_t m = 0;

    // M x k view, column n is the vector symbol s(n)
    Eigen::Map<const ComplexMatrix> vectors() const
    {
        return {s.data(), static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)};
    }
};

// Scales points so each stream carries P_T / M and a vector symbol carries P_T on average
SymbolBlock map_symbols(const std::vector<std::uint32_t> &indices, const Constellation &c, double pt, std::size_t m);

// Uniform random labels (k M of them)
std::vector<std::uint32_t> random_indices(std::size_t count, const Constellation &c, std::uint64_t seed);

struct PrecoderPair
{
    ComplexMatrix q;     // N_T x M
    ComplexMatrix d;     // N_R x M
    std::size_t eta = 0; // strongest composite tap
};

// Tap with largest Frobenius norm, ties to the smallest index
std::size_t strongest_tap(const MatrixSequence &composite);

// Q, D = top-M right, left singular vectors of the strongest composite tap. Throws RankDeficiencyError.
PrecoderPair select_precoders(const MatrixSequence &composite, std::size_t m);

// x(n) = Q s(n), returned as N_T x k
ComplexMatrix apply_precoder(const SymbolBlock &block, const ComplexMatrix &q);

} // namespace sclink::txrx

#endif
