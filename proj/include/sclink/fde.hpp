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


#ifndef SCLINK_FDE_HPP
#define SCLINK_FDE_HPP

#include "sclink/numerics.hpp"

namespace sclink::fde
{

// Cyclic extension of an M x k block: the last c vector symbols are copied to the front
ComplexMatrix add_cp(const ComplexMatrix &block, std::size_t c);
ComplexMatrix remove_cp(const ComplexMatrix &extended, std::size_t c);

// Shortest prefix that keeps a composite channel of `composite_len` taps circular over the block
std::size_t default_cp_length(std::size_t composite_len);

struct FdeEqualizer
{
    std::size_t k = 0;
    std::size_t m = 0;
    ComplexMatrix bins;    // M*M x k, column n is vec(H(n) Q) in column-major order
    ComplexMatrix inverse; // M*M x k, column n is vec of the per-bin equalizer

    Eigen::Map<const ComplexMatrix> bin(std::size_t n) const
    {
        return {bins.col(static_cast<Eigen::Index>(n)).data(), static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)};
    }
    Eigen::Map<const ComplexMatrix> equalizer(std::size_t n) const
    {
        return {inverse.col(static_cast<Eigen::Index>(n)).data(), static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)};
    }
};

// k-point DFT of the effective M x M taps G(l) = D^H h(l) Q: one matrix per bin, as M*M x k
ComplexMatrix channel_bins(const MatrixSequence &g, std::size_t k);

// Zero-forcing per bin, (H(n) Q)^-1. A bin whose condition number exceeds 1e12, or whose norm is
// below 1e-12 of the strongest bin, throws SingularBinError with its index.
// With mmse set, each bin uses (B^H B + sigma2 / es I)^-1 B^H instead.
FdeEqualizer build_fde(const MatrixSequence &g, std::size_t k, bool mmse = false, double sigma2 = 0.0, double es = 1.0);
FdeEqualizer build_fde(const MatrixSequence &h, const ComplexMatrix &q, const ComplexMatrix &d, std::size_t k,
                       bool mmse = false, double sigma2 = 0.0, double es = 1.0);

// Equalizes one post-coded M x k block (CP already removed)
ComplexMatrix equalize_block(const ComplexMatrix &r, const FdeEqualizer &eq);

// Receives consecutive CP blocks: y is N_R x (n_blocks (k + c)) or longer; returns M x (n_blocks k)
ComplexMatrix fde_receive(const ComplexMatrix &y, const ComplexMatrix &d, const FdeEqualizer &eq, std::size_t c,
                          std::size_t n_blocks = 1);

// Single block with the equalizer built on the spot
ComplexMatrix fde_receive(const ComplexMatrix &y_cp, const ComplexMatrix &d, const MatrixSequence &h,
                          const ComplexMatrix &q, std::size_t k);

// Post-equalization noise covariance per bin, sigma2 (B_n)^-1 (B_n)^-H for B_n = H(n) Q
MatrixSequence noise_enhancement(const MatrixSequence &bins, double sigma2);
MatrixSequence noise_enhancement(const FdeEqualizer &eq, double sigma2);

} // namespace sclink::fde

#endif
