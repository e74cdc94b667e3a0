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
#include "sclink/pulses.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace sclink;
using namespace sclink::pulses;

namespace
{

constexpr double pi = std::numbers::pi;

double max_asymmetry(const std::vector<double> &t)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i)
        worst = std::max(worst, std::abs(t[i] - t[t.size() - 1 - i]));
    return worst;
}

// |DTFT|^2 of an even, center-aligned pulse at f cycles/sample, evaluated directly
double dtft_power(const std::vector<double> &taps, double f)
{
    const long h = static_cast<long>(taps.size()) / 2;
    double acc = 0.0;
    for (long n = -h; n <= h; ++n)
        acc += taps[n + h] * std::cos(2.0 * pi * f * n);
    return acc * acc;
}

// Peak side-lobe level (dB) on a dense direct-evaluation grid: highest value past the first null
double peak_sidelobe_db(const std::vector<double> &taps, int grid = 20000)
{
    std::vector<double> p(grid + 1);
    for (int i = 0; i <= grid; ++i)
        p[i] = dtft_power(taps, 0.5 * i / grid);
    int i = 1;
    while (i < grid && p[i + 1] < p[i])
        ++i;
    const double side = *std::max_element(p.begin() + i, p.end());
    return 10.0 * std::log10(side / p[0]);
}

std::vector<double> autocorrelation(const std::vector<double> &p)
{
    std::vector<double> r(2 * p.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            r[i + p.size() - 1 - j] += p[i] * p[j];
    return r;
}

} // namespace

TEST_CASE("rrc closed form at the special points")
{
    const double a = 0.22;
    CHECK(rrc_value(a, 0.0) == doctest::Approx(1.0 - a + 4.0 * a / pi));

    // The t = T/(4 alpha) branch is the limit of the generic expression
    const double ts = 1.0 / (4.0 * a);
    CHECK(rrc_value(a, ts) == doctest::Approx(rrc_value(a, ts + 1e-6)).epsilon(1e-5));
    CHECK(rrc_value(a, -ts) == doctest::Approx(rrc_value(a, -ts - 1e-6)).epsilon(1e-5));

    // alpha = 0 reduces to sinc
    CHECK(rrc_value(0.0, 0.3) == doctest::Approx(std::sin(pi * 0.3) / (pi * 0.3)));
    CHECK(std::isfinite(rrc_value(1.0, 0.25)));
    CHECK_THROWS_AS(rrc_value(1.5, 0.1), ContractViolation);
}

TEST_CASE("rrc taps are even and unit energy")
{
    for (double a : {0.0, 0.22, 0.5, 1.0})
    {
        const auto p = rrc_taps(a, 8, 8);
        CHECK(p.taps.size() == 2 * 8 * 8 + 1);
        CHECK(max_asymmetry(p.taps) < 1e-12);
        double e = 0.0;
        for (double v : p.taps)
            e += v * v;
        CHECK(e == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("rrc autocorrelation is Nyquist away from the truncation edge")
{
    const int os = 8, span = 16;
    const auto r = autocorrelation(rrc_taps(0.22, os, span).taps);
    const long c = static_cast<long>(r.size()) / 2;
    CHECK(r[c] == doctest::Approx(1.0).epsilon(1e-12));
    double interior = 0.0;
    for (long n = 1; n < span; ++n)
        interior = std::max(interior, std::abs(r[c + n * os]));
    CHECK(interior <= 1e-3);

    // Lags at and beyond the span only see the truncated tails
    double edge = 0.0;
    for (long n = span; c + n * os < static_cast<long>(r.size()); ++n)
        edge = std::max(edge, std::abs(r[c + n * os]));
    CHECK(edge <= 2e-3);

    // Doubling the span pushes every lag under 1e-3, so the edge residue is truncation
    const auto r2 = autocorrelation(rrc_taps(0.22, os, 2 * span).taps);
    const long c2 = static_cast<long>(r2.size()) / 2;
    double worst = 0.0;
    for (long n = 1; c2 + n * os < static_cast<long>(r2.size()); ++n)
        worst = std::max(worst, std::abs(r2[c2 + n * os]));
    CHECK(worst <= 1e-3);
}

TEST_CASE("phydyas coefficients, length and symmetry")
{
    const auto c = phydyas_coefficients();
    CHECK(c[0] == 1.0);
    CHECK(c[1] == doctest::Approx(0.97195983));
    CHECK(c[2] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(c[3] == doctest::Approx(std::sqrt(1.0 - c[1] * c[1])));
    CHECK(phydyas_coefficients(true)[3] == doctest::Approx(std::sqrt(1.0 - c[1])));

    for (int ms : {1, 4, 16, 64})
    {
        const auto p = phydyas_taps(ms, ms);
        CHECK(p.taps.size() == static_cast<std::size_t>(4 * ms - 1));
        CHECK(max_asymmetry(p.taps) < 1e-9);
    }

    // Native evaluation matches the printed index form p(n), n = 0..KM-2
    const int ms = 16;
    const auto p = phydyas_taps(ms, ms);
    for (int n = 0; n <= 4 * ms - 2; ++n)
    {
        double ref = c[0];
        for (int k = 1; k < 4; ++k)
            ref += 2.0 * ((k % 2) ? -1.0 : 1.0) * c[k] * std::cos(2.0 * pi * k * (n + 1) / (4.0 * ms));
        CHECK(p.taps[n] == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("chebyshev polynomial branches meet at x = 1")
{
    for (int n : {1, 4, 254})
    {
        CHECK(chebyshev(n, 1.0) == doctest::Approx(1.0));
        CHECK(chebyshev(n, 1.0 + 1e-13) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(chebyshev(n, 0.3) == doctest::Approx(std::cos(n * std::acos(0.3))));
    }
    CHECK(chebyshev(3, -2.0) == doctest::Approx(4.0 * -8.0 - 3.0 * -2.0));
}

TEST_CASE("dolph-chebyshev pulse symmetry and side-lobe level")
{
    const auto p = dc_taps(255, -50.0);
    CHECK(p.taps.size() == 255);
    CHECK(max_asymmetry(p.taps) < 1e-12);
    CHECK(peak_sidelobe_db(p.taps) <= -50.0 + 0.5);

    for (double a : {-40.0, -50.0, -60.0})
        CHECK(std::abs(peak_sidelobe_db(dc_taps(255, a).taps) - a) <= 1.0);

    CHECK_THROWS_AS(dc_taps(254, -50.0), ContractViolation);
    CHECK_THROWS_AS(dc_taps(255, 10.0), ContractViolation);
}

TEST_CASE("dolph-chebyshev side lobes are equiripple")
{
    const auto db = spectrum(dc_taps(255, -50.0), 1 << 16);
    std::size_t i = 1;
    while (db[i + 1] < db[i])
        ++i;
    int lobes = 0;
    for (std::size_t j = i + 1; j + 1 < db.size() / 2; ++j)
        if (db[j] > db[j - 1] && db[j] >= db[j + 1])
        {
            CHECK(std::abs(db[j] + 50.0) <= 1.0);
            ++lobes;
        }
    CHECK(lobes > 100);
}

TEST_CASE("spectrum normalization and size")
{
    DiscretePulse p;
    p.taps.assign(256, 0.0);
    for (std::size_t i = 0; i < 256; ++i)
        p.taps[i] = std::sin(pi * (i + 0.5) / 256.0);
    const auto s = spectrum(p, 1024);
    CHECK(s.size() == 1024);
    CHECK(*std::max_element(s.begin(), s.end()) == doctest::Approx(0.0));

    DiscretePulse impulse;
    impulse.taps = {1.0};
    for (double v : spectrum(impulse, 64))
        CHECK(std::abs(v) < 1e-12);
    CHECK_THROWS_AS(spectrum(p, 100), ContractViolation);
}

TEST_CASE("bandwidth of the rrc pulse tracks the excess bandwidth")
{
    const double a = 0.22;
    const auto p = rrc_taps(a, 16, 16);
    const double bt = bandwidth(p, 40.0) * 16.0;
    CHECK(std::abs(bt - (1.0 + a)) <= 0.1 * (1.0 + a));
}

TEST_CASE("bandwidth is monotone in threshold and in time scale")
{
    const auto p = phydyas_taps(16, 16);
    CHECK(bandwidth(p, 30.0) <= bandwidth(p, 40.0));
    CHECK(bandwidth(p, 40.0) <= bandwidth(p, 50.0));

    // Twice the samples per symbol: the same pulse stretched in time
    CHECK(bandwidth(phydyas_taps(16, 32), 40.0) <= bandwidth(p, 40.0));
    CHECK(bandwidth(rrc_taps(0.22, 32, 16), 40.0) <= bandwidth(rrc_taps(0.22, 16, 16), 40.0));

    DiscretePulse impulse;
    impulse.taps = {1.0};
    CHECK_THROWS_AS(bandwidth(impulse, 40.0), MeasurementError);
}

TEST_CASE("phydyas symbol interval at 500 MHz")
{
    PulseSpec spec;
    spec.kind = PulseKind::Phydyas;
    const double ts = solve_symbol_interval(spec, 500e6, 40.0);
    CHECK(std::abs(ts - 3.96e-9) <= 0.02 * 3.96e-9);
}

TEST_CASE("symbol-spaced taps")
{
    DiscretePulse impulse;
    impulse.taps = {0.0, 0.0, 2.0, 0.0, 0.0};
    impulse.oversampling = 2;
    const auto one = symbol_spaced(impulse);
    REQUIRE(one.size() == 3);
    CHECK(one[1] == doctest::Approx(1.0));
    CHECK(one[0] == 0.0);

    DiscretePulse delta;
    delta.taps = {3.0};
    delta.oversampling = 4;
    CHECK(symbol_spaced(delta) == std::vector<double>{1.0});

    const auto rrc = symbol_spaced(rrc_taps(0.22, 8, 8));
    CHECK(rrc.size() == 17);
    double e = 0.0;
    for (double v : rrc)
        e += v * v;
    CHECK(e == doctest::Approx(1.0).epsilon(1e-12));

    DiscretePulse frac = rrc_taps(0.22, 8, 8);
    frac.oversampling = 7.5;
    CHECK_THROWS_AS(symbol_spaced(frac), ContractViolation);
}
