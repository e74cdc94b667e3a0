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


#include "sclink/errors.hpp"
#include "sclink/rng.hpp"
#include "sclink/txrx.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>

using namespace sclink;
using namespace sclink::txrx;

TEST_CASE("QPSK points and labels")
{
    const auto c = qam(4);
    CHECK(c.bits == 2);
    REQUIRE(c.points.size() == 4);
    const double a = 1.0 / std::sqrt(2.0);
    for (const auto &p : c.points)
    {
        CHECK(std::abs(std::abs(p.real()) - a) < 1e-15);
        CHECK(std::abs(std::abs(p.imag()) - a) < 1e-15);
    }
    CHECK_THROWS_AS(qam(8), ContractViolation);
}

TEST_CASE("square QAM has unit energy and Gray labels")
{
    for (int order : {4, 16, 64})
    {
        CAPTURE(order);
        const auto c = qam(order);
        double e = 0.0;
        for (const auto &p : c.points)
            e += std::norm(p);
        CHECK(e / order == doctest::Approx(1.0).epsilon(1e-12));

        // Nearest neighbours on the grid differ in exactly one bit
        double dmin = 1e9;
        for (int i = 0; i < order; ++i)
            for (int j = i + 1; j < order; ++j)
                dmin = std::min(dmin, std::abs(c.points[i] - c.points[j]));
        for (int i = 0; i < order; ++i)
            for (int j = i + 1; j < order; ++j)
                if (std::abs(std::abs(c.points[i] - c.points[j]) - dmin) < 1e-9)
                    CHECK(std::popcount(static_cast<unsigned>(i ^ j)) == 1);
    }
}

TEST_CASE("mapped symbols carry P_T per vector")
{
    const auto c = qam(16);
    const double pt = 2.5;
    const std::size_t m = 4, k = 25000;
    const auto block = map_symbols(random_indices(k * m, c, 11), c, pt, m);
    REQUIRE(block.s.size() == Eigen::Index(k * m));
    const auto v = block.vectors();
    CHECK(v.rows() == Eigen::Index(m));
    CHECK(v.cols() == Eigen::Index(k));
    CHECK(std::abs(v.colwise().squaredNorm().mean() - pt) <= 0.01 * pt);
    for (Eigen::Index r = 0; r < v.rows(); ++r)
        CHECK(std::abs(v.row(r).squaredNorm() / k - pt / m) <= 0.02 * pt / m);

    const auto same = random_indices(100, c, 11);
    CHECK(same == random_indices(100, c, 11));
    CHECK_THROWS_AS(map_symbols({1, 2, 3}, c, pt, 2), ContractViolation);
}

TEST_CASE("precoders of a diagonal tap")
{
    MatrixSequence h{ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)};
    h[1](0, 0) = 3.0;
    h[1](1, 1) = 1.0;
    const auto pp = select_precoders(h, 1);
    CHECK(pp.eta == 1);
    CHECK(std::abs(std::abs(pp.q(0, 0)) - 1.0) < 1e-14);
    CHECK(std::abs(pp.q(1, 0)) < 1e-14);
    CHECK(std::abs(std::abs(pp.d(0, 0)) - 1.0) < 1e-14);
    CHECK(std::abs((pp.d.adjoint() * h[1] * pp.q)(0, 0)) == doctest::Approx(3.0));
    CHECK_THROWS_AS(select_precoders(h, 3), ContractViolation);
}

TEST_CASE("strongest tap ties go to the earliest index")
{
    MatrixSequence h(3, ComplexMatrix::Identity(2, 2));
    CHECK(strongest_tap(h) == 0);
    h[2] *= 2.0;
    CHECK(strongest_tap(h) == 2);
}

TEST_CASE("precoders diagonalize the strongest tap")
{
    Rng rng(3);
    MatrixSequence h(3, ComplexMatrix(4, 4));
    for (auto &t : h)
        for (Eigen::Index i = 0; i < t.size(); ++i)
            t.data()[i] = rng.complex_normal();
    h[2] *= 3.0;
    const auto pp = select_precoders(h, 2);
    CHECK(pp.eta == 2);
    CHECK((pp.q.adjoint() * pp.q - ComplexMatrix::Identity(2, 2)).norm() < 1e-12);
    CHECK((pp.d.adjoint() * pp.d - ComplexMatrix::Identity(2, 2)).norm() < 1e-12);
    const ComplexMatrix g = pp.d.adjoint() * h[2] * pp.q;
    CHECK(std::abs(g(0, 1)) < 1e-12);
    CHECK(std::abs(g(1, 0)) < 1e-12);
    const auto sv = numerics::svd(h[2]).singular;
    CHECK(std::abs(g(0, 0)) == doctest::Approx(sv[0]));
    CHECK(std::abs(g(1, 1)) == doctest::Approx(sv[1]));

    // A common gain leaves the selected subspaces unchanged
    MatrixSequence hs = h;
    for (auto &t : hs)
        t *= 7.0;
    const auto ps = select_precoders(hs, 2);
    CHECK((ps.q * ps.q.adjoint() - pp.q * pp.q.adjoint()).norm() < 1e-10);
    CHECK((ps.d * ps.d.adjoint() - pp.d * pp.d.adjoint()).norm() < 1e-10);
}

TEST_CASE("rank-deficient strongest tap")
{
    MatrixSequence h{ComplexMatrix::Zero(3, 3)};
    h[0](0, 0) = 1.0;
    CHECK_NOTHROW(select_precoders(h, 1));
    CHECK_THROWS_AS(select_precoders(h, 2), RankDeficiencyError);
}

TEST_CASE("unitary precoding preserves per-vector energy")
{
    Rng rng(9);
    const auto c = qam(4);
    const auto block = map_symbols(random_indices(2 * 50, c, 2), c, 1.0, 2);
    ComplexMatrix a(4, 4);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        a.data()[i] = rng.complex_normal();
    const ComplexMatrix q = numerics::svd(a).left.leftCols(2);
    const auto x = apply_precoder(block, q);
    REQUIRE(x.rows() == 4);
    REQUIRE(x.cols() == 50);
    const auto v = block.vectors();
    for (Eigen::Index n = 0; n < 50; ++n)
        CHECK(x.col(n).norm() == doctest::Approx(v.col(n).norm()));
}
