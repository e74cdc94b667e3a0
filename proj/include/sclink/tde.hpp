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


#ifndef SCLINK_TDE_HPP
#define SCLINK_TDE_HPP

#include "sclink/numerics.hpp"

#include <cstdint>

namespace sclink::tde
{

// Noise-free matrix FIR: y(n) = sum_l h(l) x(n - l). Returns x.cols() + h.size() - 1 columns.
ComplexMatrix convolve(const ComplexMatrix &x, const MatrixSequence &h);

// Adds CN(0, sigma2) to every entry
void add_noise(ComplexMatrix &y, double sigma2, std::uint64_t seed);

// convolve() plus receiver noise of variance sigma2 per antenna
ComplexMatrix channel_pass(const ComplexMatrix &x, const MatrixSequence &h, double sigma2, std::uint64_t seed);

// r(n) = D^H y(n)
ComplexMatrix postcode(const ComplexMatrix &y, const ComplexMatrix &d);

// Effective M x M taps G(l) = D^H h(l) Q
MatrixSequence effective_taps(const MatrixSequence &h, const ComplexMatrix &q, const ComplexMatrix &d);

struct LmmseEqualizer
{
    ComplexMatrix e;               // (depth M) x M
    std::size_t depth = 0;         // number of stacked observations, P~
    std::size_t delay = 0;         // s(n) is estimated from r(n - delay) .. r(n - delay + depth - 1)
    ComplexMatrix error_covariance; // closed-form E[(s - s_hat)(s - s_hat)^H]
};

// Wiener solution E = R_rr^-1 R_rs for white symbols of energy es per stream and noise sigma2 I.
// Throws SingularSystemError.
LmmseEqualizer build_lmmse(const MatrixSequence &g, double sigma2, double es, std::size_t delay = 0);

// Convenience overload taking the composite channel, precoders and total transmit power
LmmseEqualizer build_lmmse(const MatrixSequence &h, const ComplexMatrix &q, const ComplexMatrix &d, double sigma2,
                           double pt, std::size_t m, std::size_t delay = 0);

// s_hat(n) = E^H [r(n - delay); ...; r(n - delay + depth - 1)] for n = 0..k-1, missing samples as zero
ComplexMatrix equalize(const ComplexMatrix &r, const LmmseEqualizer &eq, std::size_t k);

} // namespace sclink::tde

#endif
