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


#include "sclink/tde.hpp"

#include "sclink/errors.hpp"
#include "sclink/rng.hpp"

#include <algorithm>

namespace sclink::tde
{

ComplexMatrix convolve(const ComplexMatrix &x, const MatrixSequence &h)
{
    if (h.empty())
        throw ContractViolation("convolve: empty channel");
    if (h[0].cols() != x.rows())
        throw ContractViolation("convolve: channel has " + std::to_string(h[0].cols()) + " inputs, signal has " +
                                std::to_string(x.rows()) + " rows");
    const Eigen::Index n = x.cols();
    ComplexMatrix y = ComplexMatrix::Zero(h[0].rows(), n + static_cast<Eigen::Index>(h.size()) - 1);
    for (std::size_t l = 0; l < h.size(); ++l)
        y.middleCols(static_cast<Eigen::Index>(l), n).noalias() += h[l] * x;
    return y;
}

void add_noise(ComplexMatrix &y, double sigma2, std::uint64_t seed)
{
    if (!(sigma2 >= 0.0))
        throw ContractViolation("add_noise: variance must be non-negative");
    if (sigma2 == 0.0)
        return;
    Rng rng(seed);
    cdouble *p = y.data();
    for (Eigen::Index i = 0; i < y.size(); ++i)
        p[i] += rng.complex_normal(sigma2);
}

ComplexMatrix channel_pass(const ComplexMatrix &x, const MatrixSequence &h, double sigma2, std::uint64_t seed)
{
    ComplexMatrix y = convolve(x, h);
    add_noise(y, sigma2, seed);
    return y;
}

ComplexMatrix postcode(const ComplexMatrix &y, const ComplexMatrix &d)
{
    if (d.rows() != y.rows())
        throw ContractViolation("postcode: D must have N_R rows");
    return d.adjoint() * y;
}

MatrixSequence effective_taps(const MatrixSequence &h, const ComplexMatrix &q, const ComplexMatrix &d)
{
    MatrixSequence g;
    g.reserve(h.size());
    for (const auto &t : h)
    {
        if (t.rows() != d.rows() || t.cols() != q.rows())
            throw ContractViolation("effective_taps: precoder dimensions do not match the channel");
        g.push_back(d.adjoint() * t * q);
    }
    return g;
}

LmmseEqualizer build_lmmse(const MatrixSequence &g, double sigma2, double es, std::size_t delay)
{
    if (g.empty())
        throw ContractViolation("build_lmmse: empty channel");
    if (!(sigma2 >= 0.0) || !(es > 0.0))
        throw ContractViolation("build_lmmse: need sigma2 >= 0 and es > 0");
    const std::size_t depth = g.size();
    if (delay >= depth)
        throw ContractViolation("build_lmmse: delay must be below the stacking depth");
    const Eigen::Index m = g[0].rows();
    const Eigen::Index n = static_cast<Eigen::Index>(depth) * m;

    // Block-Toeplitz covariance, lag matrices C(d) = es sum_l G(l) G(l + d)^H
    MatrixSequence lag(depth, ComplexMatrix::Zero(m, m));
    for (std::size_t d = 0; d < depth; ++d)
        for (std::size_t l = 0; l + d < depth; ++l)
            lag[d].noalias() += g[l] * g[l + d].adjoint();

    ComplexMatrix rrr(n, n);
    for (std::size_t i = 0; i < depth; ++i)
        for (std::size_t j = i; j < depth; ++j)
        {
            const auto bi = static_cast<Eigen::Index>(i) * m, bj = static_cast<Eigen::Index>(j) * m;
            rrr.block(bi, bj, m, m) = es * lag[j - i];
            if (j != i)
                rrr.block(bj, bi, m, m) = es * lag[j - i].adjoint();
        }
    rrr.diagonal().array() += sigma2;

    ComplexMatrix rrs = ComplexMatrix::Zero(n, m);
    for (std::size_t i = delay; i < depth; ++i)
        rrs.middleRows(static_cast<Eigen::Index>(i) * m, m) = es * g[i - delay];

    LmmseEqualizer eq;
    eq.depth = depth;
    eq.delay = delay;
    eq.e = numerics::hermitian_solve(rrr, rrs);
    eq.error_covariance = es * ComplexMatrix::Identity(m, m) - rrs.adjoint() * eq.e;
    return eq;
}

LmmseEqualizer build_lmmse(const MatrixSequence &h, const ComplexMatrix &q, const ComplexMatrix &d, double sigma2,
                           double pt, std::size_t m, std::size_t delay)
{
    if (m == 0 || static_cast<std::size_t>(q.cols()) != m || static_cast<std::size_t>(d.cols()) != m)
        throw ContractViolation("build_lmmse: Q and D must have M columns");
    return build_lmmse(effective_taps(h, q, d), sigma2, pt / static_cast<double>(m), delay);
}

ComplexMatrix equalize(const ComplexMatrix &r, const LmmseEqualizer &eq, std::size_t k)
{
    const Eigen::Index m = eq.e.cols();
    if (r.rows() != m || eq.e.rows() != static_cast<Eigen::Index>(eq.depth) * m)
        throw ContractViolation("equalize: observation and equalizer dimensions differ");

    const auto kk = static_cast<Eigen::Index>(k);
    const Eigen::Index t = r.cols();
    ComplexMatrix out = ComplexMatrix::Zero(m, kk);
    for (std::size_t i = 0; i < eq.depth; ++i)
    {
        const Eigen::Index shift = static_cast<Eigen::Index>(i) - static_cast<Eigen::Index>(eq.delay);
        const Eigen::Index n0 = std::max<Eigen::Index>(0, -shift);
        const Eigen::Index n1 = std::min<Eigen::Index>(kk, t - shift);
        if (n1 <= n0)
            continue;
        out.middleCols(n0, n1 - n0).noalias() +=
            eq.e.middleRows(static_cast<Eigen::Index>(i) * m, m).adjoint() * r.middleCols(n0 + shift, n1 - n0);
    }
    return out;
}

} // namespace sclink::tde
