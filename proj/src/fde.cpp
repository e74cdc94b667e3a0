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


#include "sclink/fde.hpp"

#include "sclink/errors.hpp"
#include "sclink/tde.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace sclink::fde
{

namespace
{

// sqrt(|z|^2) rather than std::abs: hypot dominates the build for small bins
double norm1(const auto &a) { return a.cwiseAbs2().cwiseSqrt().colwise().sum().maxCoeff(); }

// Inverts the M x M bin at `in` into `out`; returns the 1-norm condition number (inf when singular)
template <int M>
double invert_fixed(const cdouble *in, cdouble *out)
{
    using Mat = Eigen::Matrix<cdouble, M, M>;
    Eigen::Map<const Mat> a(in);
    Eigen::Map<Mat> inv(out);
    Mat tmp;
    bool ok = false;
    a.computeInverseWithCheck(tmp, ok, 0.0);
    if (!ok)
        return INFINITY;
    inv = tmp;
    return norm1(a) * norm1(tmp);
}

double invert_dynamic(const cdouble *in, cdouble *out, Eigen::Index m)
{
    Eigen::Map<const ComplexMatrix> a(in, m, m);
    Eigen::Map<ComplexMatrix> inv(out, m, m);
    Eigen::PartialPivLU<ComplexMatrix> lu(a);
    inv = lu.inverse();
    return norm1(a) * norm1(inv);
}

double invert(const cdouble *in, cdouble *out, Eigen::Index m)
{
    switch (m)
    {
    case 1:
        return invert_fixed<1>(in, out);
    case 2:
        return invert_fixed<2>(in, out);
    case 3:
        return invert_fixed<3>(in, out);
    case 4:
        return invert_fixed<4>(in, out);
    default:
        return invert_dynamic(in, out, m);
    }
}

// z.col(n) <- W(n) z.col(n) for every bin, W stored column-major in `inv`
template <int M>
void apply_bins_fixed(const ComplexMatrix &inv, ComplexMatrix &z)
{
    using Mat = Eigen::Matrix<cdouble, M, M>;
    using Vec = Eigen::Matrix<cdouble, M, 1>;
    for (Eigen::Index n = 0; n < z.cols(); ++n)
    {
        const Vec v = Eigen::Map<const Mat>(inv.col(n).data()) * Eigen::Map<const Vec>(z.col(n).data());
        z.col(n) = v;
    }
}

void apply_bins(const ComplexMatrix &inv, ComplexMatrix &z)
{
    const Eigen::Index m = z.rows();
    switch (m)
    {
    case 1:
        z.row(0).array() *= inv.row(0).array();
        return;
    case 2:
        return apply_bins_fixed<2>(inv, z);
    case 3:
        return apply_bins_fixed<3>(inv, z);
    case 4:
        return apply_bins_fixed<4>(inv, z);
    default:
        break;
    }
    Eigen::VectorXcd tmp(m);
    for (Eigen::Index n = 0; n < z.cols(); ++n)
    {
        tmp.noalias() = Eigen::Map<const ComplexMatrix>(inv.col(n).data(), m, m) * z.col(n);
        z.col(n) = tmp;
    }
}

} // namespace

ComplexMatrix add_cp(const ComplexMatrix &block, std::size_t c)
{
    const auto cc = static_cast<Eigen::Index>(c);
    if (c < 1 || cc > block.cols())
        throw ContractViolation("add_cp: CP length must lie in [1, k]");
    ComplexMatrix out(block.rows(), block.cols() + cc);
    out.leftCols(cc) = block.rightCols(cc);
    out.rightCols(block.cols()) = block;
    return out;
}

ComplexMatrix remove_cp(const ComplexMatrix &extended, std::size_t c)
{
    const auto cc = static_cast<Eigen::Index>(c);
    if (cc >= extended.cols())
        throw ContractViolation("remove_cp: sequence shorter than its prefix");
    return extended.rightCols(extended.cols() - cc);
}

std::size_t default_cp_length(std::size_t composite_len) { return composite_len > 1 ? composite_len - 1 : 1; }

ComplexMatrix channel_bins(const MatrixSequence &g, std::size_t k)
{
    if (g.empty() || g.size() > k)
        throw ContractViolation("channel_bins: need 1 <= taps <= k");
    const Eigen::Index m2 = g[0].size();
    ComplexMatrix seq = ComplexMatrix::Zero(m2, static_cast<Eigen::Index>(k));
    for (std::size_t l = 0; l < g.size(); ++l)
        seq.col(static_cast<Eigen::Index>(l)) = g[l].reshaped();
    return numerics::fft_rows(seq);
}

FdeEqualizer build_fde(const MatrixSequence &g, std::size_t k, bool mmse, double sigma2, double es)
{
    if (g.empty() || g[0].rows() != g[0].cols())
        throw ContractViolation("build_fde: effective taps must be square M x M");

    FdeEqualizer eq;
    eq.k = k;
    eq.m = static_cast<std::size_t>(g[0].rows());
    eq.bins = channel_bins(g, k);
    eq.inverse.resize(eq.bins.rows(), eq.bins.cols());
    const auto m = static_cast<Eigen::Index>(eq.m);

    if (mmse)
    {
        if (!(sigma2 >= 0.0) || !(es > 0.0))
            throw ContractViolation("build_fde: MMSE needs sigma2 >= 0 and es > 0");
        const ComplexMatrix reg = (sigma2 / es) * ComplexMatrix::Identity(m, m);
        for (std::size_t n = 0; n < k; ++n)
        {
            const auto b = eq.bin(n);
            const ComplexMatrix w = numerics::hermitian_solve(b.adjoint() * b + reg, b.adjoint());
            eq.inverse.col(static_cast<Eigen::Index>(n)) = w.reshaped();
        }
        return eq;
    }

    std::vector<double> bin_norm(k);
    for (std::size_t n = 0; n < k; ++n)
        bin_norm[n] = norm1(eq.bin(n));
    const double strongest = *std::max_element(bin_norm.begin(), bin_norm.end());

    for (std::size_t n = 0; n < k; ++n)
    {
        const auto col = static_cast<Eigen::Index>(n);
        const double nb = bin_norm[n];
        const double cond = (nb > 1e-12 * strongest) ? invert(eq.bins.col(col).data(), eq.inverse.col(col).data(), m)
                                                     : INFINITY;
        if (!std::isfinite(cond) || cond > numerics::kMaxConditionNumber)
            throw SingularBinError(n, "fde: bin " + std::to_string(n) + " is singular (condition " +
                                          std::to_string(cond) + ")");
    }
    return eq;
}

FdeEqualizer build_fde(const MatrixSequence &h, const ComplexMatrix &q, const ComplexMatrix &d, std::size_t k,
                       bool mmse, double sigma2, double es)
{
    return build_fde(tde::effective_taps(h, q, d), k, mmse, sigma2, es);
}

ComplexMatrix equalize_block(const ComplexMatrix &r, const FdeEqualizer &eq)
{
    const auto m = static_cast<Eigen::Index>(eq.m);
    if (r.rows() != m || r.cols() != static_cast<Eigen::Index>(eq.k))
        throw ContractViolation("equalize_block: block must be M x k");
    ComplexMatrix z = numerics::fft_rows(r);
    apply_bins(eq.inverse, z);
    return numerics::ifft_rows(z);
}

ComplexMatrix fde_receive(const ComplexMatrix &y, const ComplexMatrix &d, const FdeEqualizer &eq, std::size_t c,
                          std::size_t n_blocks)
{
    const auto k = static_cast<Eigen::Index>(eq.k);
    const auto stride = k + static_cast<Eigen::Index>(c);
    if (y.cols() < stride * static_cast<Eigen::Index>(n_blocks))
        throw ContractViolation("fde_receive: received sequence shorter than n_blocks (k + C)");
    if (d.rows() != y.rows() || static_cast<std::size_t>(d.cols()) != eq.m)
        throw ContractViolation("fde_receive: D must be N_R x M");

    const ComplexMatrix r = d.adjoint() * y.leftCols(stride * static_cast<Eigen::Index>(n_blocks));
    ComplexMatrix out(d.cols(), k * static_cast<Eigen::Index>(n_blocks));
    for (std::size_t b = 0; b < n_blocks; ++b)
    {
        const auto start = static_cast<Eigen::Index>(b) * stride + static_cast<Eigen::Index>(c);
        out.middleCols(static_cast<Eigen::Index>(b) * k, k) = equalize_block(r.middleCols(start, k), eq);
    }
    return out;
}

ComplexMatrix fde_receive(const ComplexMatrix &y_cp, const ComplexMatrix &d, const MatrixSequence &h,
                          const ComplexMatrix &q, std::size_t k)
{
    if (y_cp.cols() < static_cast<Eigen::Index>(k + 1))
        throw ContractViolation("fde_receive: block shorter than k + 1");
    const std::size_t c = static_cast<std::size_t>(y_cp.cols()) - k;
    return fde_receive(y_cp, d, build_fde(h, q, d, k), c, 1);
}

MatrixSequence noise_enhancement(const MatrixSequence &bins, double sigma2)
{
    MatrixSequence out;
    out.reserve(bins.size());
    for (std::size_t n = 0; n < bins.size(); ++n)
    {
        ComplexMatrix inv;
        try
        {
            inv = numerics::checked_inverse(bins[n]);
        }
        catch (const SingularSystemError &)
        {
            throw SingularBinError(n, "noise_enhancement: bin " + std::to_string(n) + " is singular");
        }
        out.push_back(sigma2 * inv * inv.adjoint());
    }
    return out;
}

MatrixSequence noise_enhancement(const FdeEqualizer &eq, double sigma2)
{
    MatrixSequence out;
    out.reserve(eq.k);
    for (std::size_t n = 0; n < eq.k; ++n)
    {
        const auto w = eq.equalizer(n);
        out.push_back(sigma2 * w * w.adjoint());
    }
    return out;
}

} // namespace sclink::fde
