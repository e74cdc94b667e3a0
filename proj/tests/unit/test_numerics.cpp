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


#include "oracles/oracles.hpp"
#include "sclink/errors.hpp"
#include "sclink/numerics.hpp"
#include "sclink/rng.hpp"

#include <doctest.h>

using namespace sclink;

namespace
{

ComplexMatrix random_matrix(Eigen::Index r, Eigen::Index c, Rng &rng)
{
    ComplexMatrix m(r, c);
    for (Eigen::Index i = 0; i < m.size(); ++i)
        m.data()[i] = rng.complex_normal(1.0);
    return m;
}

} // namespace

TEST_CASE("fft of an impulse and of a constant")
{
    ComplexVector delta = ComplexVector::Zero(4);
    delta[0] = 1.0;
    const ComplexVector d = numerics::fft(delta, 4);
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(d[i] - cdouble(1.0)) < 1e-15);

    const ComplexVector c = numerics::fft(ComplexVector::Ones(4), 4);
    CHECK(std::abs(c[0] - cdouble(4.0)) < 1e-15);
    for (int i = 1; i < 4; ++i)
        CHECK(std::abs(c[i]) < 1e-15);
}

TEST_CASE("fft agrees with a direct DFT")
{
    Rng rng(3);
    for (std::size_t n : {1u, 2u, 7u, 64u, 100u})
    {
        ComplexVector x = random_matrix(static_cast<Eigen::Index>(n), 1, rng);
        std::vector<cdouble> xv(x.data(), x.data() + n);
        const auto ref = oracle::dft(xv);
        const ComplexVector got = numerics::fft(x, n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(got[static_cast<Eigen::Index>(i)] - ref[i]) < 1e-10 * std::sqrt(double(n)));
    }
}

TEST_CASE("fft roundtrip and Parseval up to 4096 points")
{
    Rng rng(5);
    for (std::size_t n : {64u, 255u, 1024u, 4096u})
    {
        const ComplexVector x = random_matrix(static_cast<Eigen::Index>(n), 1, rng);
        const ComplexVector f = numerics::fft(x, n);
        const ComplexVector back = numerics::ifft(f, n);
        CHECK((back - x).norm() <= 1e-12 * x.norm());
        CHECK(std::abs(x.squaredNorm() - f.squaredNorm() / double(n)) <= 1e-10 * x.squaredNorm());
    }
}

TEST_CASE("fft rejects a length mismatch")
{
    CHECK_THROWS_AS(numerics::fft(ComplexVector::Ones(4), 8), ContractViolation);
    CHECK_THROWS_AS(numerics::ifft(ComplexVector::Ones(4), 3), ContractViolation);
}

TEST_CASE("row-wise transforms match per-row transforms")
{
    Rng rng(9);
    const ComplexMatrix x = random_matrix(3, 16, rng);
    const ComplexMatrix f = numerics::fft_rows(x);
    for (Eigen::Index r = 0; r < 3; ++r)
    {
        const ComplexVector row = x.row(r).transpose();
        CHECK((f.row(r).transpose() - numerics::fft(row, 16)).norm() < 1e-12);
    }
    CHECK((numerics::ifft_rows(f) - x).norm() < 1e-12 * x.norm());
}

TEST_CASE("svd of identity and diagonal matrices")
{
    const auto id = numerics::svd(ComplexMatrix::Identity(2, 2));
    CHECK(id.singular[0] == doctest::Approx(1.0));
    CHECK(id.singular[1] == doctest::Approx(1.0));

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    const auto s = numerics::svd(d);
    CHECK(s.singular[0] == doctest::Approx(3.0));
    CHECK(s.singular[1] == doctest::Approx(1.0));
    CHECK(std::abs(s.left(0, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(s.right(0, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(s.left(1, 0)) < 1e-12);
}

TEST_CASE("svd reconstruction and orthonormality on random matrices")
{
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial)
    {
        const auto r = static_cast<Eigen::Index>(1 + rng.below(32));
        const auto c = static_cast<Eigen::Index>(1 + rng.below(32));
        const ComplexMatrix m = random_matrix(r, c, rng);
        const auto s = numerics::svd(m);
        const ComplexMatrix rec = s.left * s.singular.asDiagonal() * s.right.adjoint();
        CHECK((rec - m).norm() <= 1e-10 * m.norm());
        const auto k = s.singular.size();
        CHECK((s.left.adjoint() * s.left - ComplexMatrix::Identity(k, k)).norm() < 1e-10);
        CHECK((s.right.adjoint() * s.right - ComplexMatrix::Identity(k, k)).norm() < 1e-10);
        for (Eigen::Index i = 0; i < k; ++i)
        {
            CHECK(s.singular[i] >= 0.0);
            if (i)
                CHECK(s.singular[i] <= s.singular[i - 1]);
        }
    }
}

TEST_CASE("hermitian_solve on scaled identities")
{
    Rng rng(13);
    const ComplexMatrix b = random_matrix(3, 2, rng);
    CHECK((numerics::hermitian_solve(ComplexMatrix::Identity(3, 3), b) - b).norm() < 1e-14);

    const ComplexMatrix half = numerics::hermitian_solve(2.0 * ComplexMatrix::Identity(3, 3), ComplexMatrix::Identity(3, 3));
    CHECK((half - 0.5 * ComplexMatrix::Identity(3, 3)).norm() < 1e-14);
}

TEST_CASE("hermitian_solve residual on random SPD systems")
{
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial)
    {
        const ComplexMatrix g = random_matrix(6, 6, rng);
        const ComplexMatrix a = g * g.adjoint() + 0.1 * ComplexMatrix::Identity(6, 6);
        const ComplexMatrix b = random_matrix(6, 3, rng);
        const ComplexMatrix x = numerics::hermitian_solve(a, b);
        CHECK((a * x - b).norm() <= 1e-9 * b.norm());
        CHECK((x - a.inverse() * b).norm() <= 1e-9 * x.norm());
    }
}

TEST_CASE("hermitian_solve reports singular and indefinite systems")
{
    ComplexMatrix a = ComplexMatrix::Identity(3, 3);
    a(2, 2) = 1e-14;
    CHECK_THROWS_AS(numerics::hermitian_solve(a, ComplexMatrix::Identity(3, 1)), SingularSystemError);
    a(2, 2) = -1.0;
    CHECK_THROWS_AS(numerics::hermitian_solve(a, ComplexMatrix::Identity(3, 1)), SingularSystemError);
    CHECK_THROWS_AS(numerics::hermitian_solve(a, ComplexMatrix::Identity(2, 1)), ContractViolation);
}

TEST_CASE("checked_inverse and reciprocal_condition")
{
    ComplexMatrix a(2, 2);
    a << 2.0, 1.0, 1.0, 3.0;
    CHECK((numerics::checked_inverse(a) * a - ComplexMatrix::Identity(2, 2)).norm() < 1e-14);
    CHECK(numerics::reciprocal_condition(ComplexMatrix::Identity(4, 4)) == doctest::Approx(1.0));

    ComplexMatrix s = ComplexMatrix::Ones(2, 2);
    CHECK(numerics::reciprocal_condition(s) == 0.0);
    CHECK_THROWS_AS(numerics::checked_inverse(s), SingularSystemError);
}
