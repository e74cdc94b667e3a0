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

#ifndef SCLINK_NUMERICS_HPP
#define SCLINK_NUMERICS_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace sclink
{

using cdouble = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Sequence of equally-sized matrices indexed by discrete time (channel taps, per-bin matrices).
using MatrixSequence = std::vector<ComplexMatrix>;

namespace numerics
{

// Condition numbers above this are reported as singular instead of returning garbage.
inline constexpr double kMaxConditionNumber = 1e12;

// Forward DFT, unnormalized: X[m] = sum_n x[n] exp(-2 pi i m n / k). k must equal x.size().
ComplexVector fft(const ComplexVector &x, std::size_t k);

// Inverse DFT carrying the 1/k factor, so ifft(fft(x)) == x.
ComplexVector ifft(const ComplexVector &x, std::size_t k);

// Row-wise transforms of a (channels x k) matrix; each row is one time sequence.
ComplexMatrix fft_rows(const ComplexMatrix &x);
ComplexMatrix ifft_rows(const ComplexMatrix &x);

struct Svd
{
    ComplexMatrix left;     // rows x r, orthonormal columns
    RealVector singular;    // r = min(rows, cols), sorted descending
    ComplexMatrix right;    // cols x r, orthonormal columns
};

// Thin singular value decomposition m = left * diag(singular) * right^H
Svd svd(const ComplexMatrix &m);

// Solves a x = b for Hermitian positive-definite a.
// Throws SingularSystemError when a is not positive definite or its condition exceeds 1e12.
ComplexMatrix hermitian_solve(const ComplexMatrix &a, const ComplexMatrix &b);

// Inverse of a general square matrix with the same 1e12 condition guard (1-norm estimate).
// Throws SingularSystemError.
ComplexMatrix checked_inverse(const ComplexMatrix &a);

// Reciprocal 1-norm condition number of a square matrix; 0 for exactly singular input.
double reciprocal_condition(const ComplexMatrix &a);

} // namespace numerics
} // namespace sclink

#endif
