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
#include "sclink/ase.hpp"
#include "sclink/errors.hpp"
#include "sclink/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace sclink;
using namespace sclink::ase;
namespace ase = sclink::ase;

namespace
{

ComplexMatrix noise(Eigen::Index rows, Eigen::Index cols, double var, std::uint64_t seed)
{
    Rng rng(seed);
    ComplexMatrix w(rows, cols);
    for (Eigen::Index i = 0; i < w.size(); ++i)
        w.data()[i] = rng.complex_normal(var);
    return w;
}

SoftEstimateModel awgn_model(Eigen::Index m, double var)
{
    SoftEstimateModel model;
    model.a = ComplexMatrix::Identity(m, m);
    model.sigma_z = var * ComplexMatrix::Identity(m, m);
    return model;
}

// Small link that runs in milliseconds per realization
LinkConfig small_link()
{
    LinkConfig cfg;
    cfg.channel.n_tx = cfg.channel.n_rx = 4;
    cfg.symbol_interval = 2e-9;
    cfg.n_symbols = 2000;
    return cfg;
}

} // namespace

TEST_CASE("fit_model on exact, noisy and unrelated estimates")
{
    const auto c = txrx::qam(4);
    const std::size_t n = 10000;
    const auto labels = txrx::random_indices(2 * n, c, 1);
    const ComplexMatrix s = txrx::map_symbols(labels, c, 2.0, 2).vectors();

    const auto exact = fit_model(s, s);
    CHECK((exact.a - ComplexMatrix::Identity(2, 2)).norm() < 1e-12);
    CHECK(exact.sigma_z.norm() < 1e-12);

    const auto noisy = fit_model(s, s + noise(2, n, 1.0, 2));
    CHECK((noisy.a - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 0.05);
    CHECK((noisy.sigma_z - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 0.05);

    const auto unrelated = fit_model(s, noise(2, n, 1.0, 3));
    CHECK(unrelated.a.cwiseAbs().maxCoeff() < 0.05);

    CHECK_THROWS_AS(fit_model(s.leftCols(39), s.leftCols(39)), InsufficientDataError);
    CHECK_NOTHROW(fit_model(s.leftCols(40), s.leftCols(40)));
}

TEST_CASE("scalar 4-QAM in AWGN matches the quadrature oracle")
{
    const auto c = txrx::qam(4);
    for (double snr_db : {0.0, 10.0})
    {
        CAPTURE(snr_db);
        const double n0 = std::pow(10.0, -snr_db / 10.0);
        const auto est = mi_lower_bound(awgn_model(1, n0), c, 1.0, 100000, 7);
        CHECK(std::abs(est.bits - oracle::qam_awgn_mi(4, 1.0, n0)) <= 0.02);
        CHECK(est.std_error < 0.01);
    }
}

TEST_CASE("limits of the bound")
{
    const auto c = txrx::qam(4);
    const auto quiet = mi_lower_bound(awgn_model(2, 1e-8), c, 0.5, 20000, 8);
    CHECK(quiet.bits <= 4.0);
    CHECK(quiet.bits >= 4.0 - 0.02);
    const auto loud = mi_lower_bound(awgn_model(2, 1e6), c, 0.5, 20000, 9);
    CHECK(loud.bits >= 0.0);
    CHECK(loud.bits <= 0.01);
}

TEST_CASE("importance sampling agrees with enumeration")
{
    const auto c = txrx::qam(16);
    SoftEstimateModel model;
    model.a = ComplexMatrix(2, 2);
    model.a << cdouble(1.0, 0.1), cdouble(0.3, -0.2), cdouble(-0.1, 0.2), cdouble(0.8, 0.0);
    model.sigma_z = ComplexMatrix(2, 2);
    model.sigma_z << 0.08, cdouble(0.02, 0.01), cdouble(0.02, -0.01), 0.06;

    MiOptions sampled;
    sampled.force_sampling = true;
    const auto ex = mi_lower_bound(model, c, 0.5, 20000, 10);
    const auto is = mi_lower_bound(model, c, 0.5, 20000, 10, sampled);
    CHECK(ex.bits > 1.0);
    CHECK(std::abs(ex.bits - is.bits) <= 0.05);
}

TEST_CASE("large alphabets stay inside the ceiling")
{
    const auto c = txrx::qam(16);
    for (double var : {1e-4, 0.05, 1.0})
    {
        CAPTURE(var);
        const auto est = mi_lower_bound(awgn_model(4, var), c, 0.25, 3000, 11);
        CHECK(est.bits >= 0.0);
        CHECK(est.bits <= 16.0);
    }
    CHECK(mi_lower_bound(awgn_model(4, 1e-6), c, 0.25, 3000, 12).bits >= 16.0 - 0.05);
}

TEST_CASE("bound does not exceed the exact MI of a flat scalar channel")
{
    const auto c = txrx::qam(4);
    const cdouble h(0.6, -0.3);
    const std::size_t n = 50000;
    for (double s2 : {0.05, 0.5})
    {
        CAPTURE(s2);
        const auto labels = txrx::random_indices(n, c, 13);
        const ComplexMatrix s = txrx::map_symbols(labels, c, 1.0, 1).vectors();
        const ComplexMatrix y = h * s + noise(1, n, s2, 14);
        const ComplexMatrix soft = std::conj(h) / (std::norm(h) + s2) * y;
        const double exact = oracle::qam_awgn_mi(4, std::norm(h), s2);

        const auto model = fit_model(s, soft);
        const auto est = mi_lower_bound(model, c, 1.0, labels, soft, 15);
        CHECK(est.bits <= exact + 3.0 * est.std_error);
        CHECK(est.bits >= exact - 0.03);

        // A deliberately wrong law never does better
        SoftEstimateModel wrong = model;
        wrong.a *= std::polar(1.0, 0.5);
        const double wrong_bits = mi_lower_bound(wrong, c, 1.0, labels, soft, 15).bits;
        CHECK(wrong_bits <= est.bits);
        if (s2 > 0.1)
            CHECK(wrong_bits < est.bits - 0.01);
    }
}

TEST_CASE("rate grows with transmit power on a fixed realization")
{
    LinkConfig cfg = small_link();
    double prev = -1.0;
    for (double p = -40.0; p <= 10.0; p += 10.0)
    {
        cfg.pt_dbw = p;
        const double mi = simulate_realization(prepare(cfg), 0, 16).mi;
        CAPTURE(p);
        CHECK(mi >= 0.0);
        CHECK(mi <= 2.0);
        CHECK(mi >= prev - 0.05);
        prev = mi;
    }
}

TEST_CASE("ase arithmetic")
{
    CHECK(ase::ase(2.0, 2.0 / 5e8, 5e8) == doctest::Approx(1.0));
    CHECK(ase::ase(1.0, 1.0 / 5e8, 5e8, 512.0 / 520.0) == doctest::Approx(512.0 / 520.0));
    CHECK(ase::ase(2.0, 3.96e-9, 5e8) == doctest::Approx(1.01).epsilon(0.01));
    CHECK(ase::ase(24.0, 3.96e-9, 5e8) == doctest::Approx(12.1).epsilon(0.01));
    CHECK_THROWS_AS(ase::ase(1.0, 0.0, 5e8), ContractViolation);

    LinkConfig cfg = small_link();
    cfg.transceiver = Transceiver::Fde;
    cfg.fde_cp = 8; // DC pulse: P~ = 4 + 2 * 3 - 1 = 9
    const auto link = prepare(cfg);
    CHECK(link.overhead == doctest::Approx(512.0 / 520.0));
    cfg.charge_cp = false;
    CHECK(prepare(cfg).overhead == 1.0);
}

TEST_CASE("link preconditions")
{
    LinkConfig cfg = small_link();
    cfg.m = 5;
    CHECK_THROWS_AS(prepare(cfg), ContractViolation);
    cfg.m = 1;
    cfg.tde_delay = 100;
    CHECK_THROWS_AS(prepare(cfg), ContractViolation);
    CHECK_THROWS_AS(transceiver_from_string("ofdm"), ContractViolation);
}

TEST_CASE("ergodic average")
{
    const auto link = prepare(small_link());
    const auto one = ergodic_ase(link, 1, 17);
    CHECK(one.mi_per_use == simulate_realization(link, 0, 17).mi);
    CHECK(one.realizations == 1);

    const auto a = ergodic_ase(link, 40, 18);
    const auto b = ergodic_ase(link, 80, 18);
    const double ratio = b.std_error / a.std_error;
    CHECK(ratio >= std::sqrt(0.5) * 0.7);
    CHECK(ratio <= std::sqrt(0.5) * 1.3);
    CHECK(a.ase == doctest::Approx(a.mi_per_use / (2e-9 * 5e8)));

    const auto again = ergodic_ase(link, 40, 18, 3);
    CHECK(again.mi_per_use == a.mi_per_use);
    CHECK(again.std_error == a.std_error);
    CHECK(again.mi_values == a.mi_values);
}
