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


#include "sclink/pulses.hpp"

#include "sclink/errors.hpp"
#include "sclink/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sclink::pulses
{

namespace
{

constexpr double pi = std::numbers::pi;

// Largest m with m / oversampling <= limit (or < limit when strict)
long half_length(double limit, double oversampling, bool strict)
{
    const double x = limit * oversampling;
    long m = static_cast<long>(std::floor(x + 1e-9));
    if (strict && std::abs(x - static_cast<double>(m)) < 1e-9)
        --m;
    return std::max(m, 0L);
}

void require_odd(int n)
{
    if (n < 3 || n % 2 == 0)
        throw ContractViolation("dc_taps: N must be odd and >= 3, got " + std::to_string(n));
}

// Dolph-Chebyshev pulse as a continuous function of the native sample index u
class DolphChebyshev
{
public:
    DolphChebyshev(int n, double attenuation_db) : n_(n)
    {
        require_odd(n);
        if (!(attenuation_db < 0.0))
            throw ContractViolation("dc_taps: attenuation must be negative");
        r_ = std::pow(10.0, -attenuation_db / 20.0);
        const double x0 = std::cosh(std::acosh(r_) / (n - 1));
        coeff_.resize((n - 1) / 2);
        for (int k = 1; k <= (n - 1) / 2; ++k)
            coeff_[k - 1] = chebyshev(n - 1, x0 * std::cos(k * pi / n));
    }

    double operator()(double u) const
    {
        double acc = r_;
        for (std::size_t k = 1; k <= coeff_.size(); ++k)
            acc += 2.0 * coeff_[k - 1] * std::cos(2.0 * pi * u * static_cast<double>(k) / n_);
        return acc / n_;
    }

private:
    int n_;
    double r_ = 1.0;
    std::vector<double> coeff_;
};

double dc_native_oversampling(int n) { return (n + 1) / 4.0; }

} // namespace

std::string to_string(PulseKind kind)
{
    switch (kind)
    {
    case PulseKind::Rrc:
        return "rrc";
    case PulseKind::Phydyas:
        return "phydyas";
    case PulseKind::DolphChebyshev:
        return "dc";
    }
    return "unknown";
}

PulseKind pulse_kind_from_string(const std::string &name)
{
    if (name == "rrc")
        return PulseKind::Rrc;
    if (name == "phydyas")
        return PulseKind::Phydyas;
    if (name == "dc")
        return PulseKind::DolphChebyshev;
    throw ContractViolation("unknown pulse '" + name + "' (expected rrc, phydyas or dc)");
}

double rrc_value(double alpha, double t)
{
    if (alpha < 0.0 || alpha > 1.0)
        throw ContractViolation("rrc: roll-off must lie in [0, 1]");
    if (t == 0.0)
        return 1.0 - alpha + 4.0 * alpha / pi;
    if (alpha > 0.0 && std::abs(std::abs(4.0 * alpha * t) - 1.0) < 1e-9)
        return alpha / std::sqrt(2.0) *
               ((1.0 + 2.0 / pi) * std::sin(pi / (4.0 * alpha)) + (1.0 - 2.0 / pi) * std::cos(pi / (4.0 * alpha)));
    const double num = std::sin(pi * t * (1.0 - alpha)) + 4.0 * alpha * t * std::cos(pi * t * (1.0 + alpha));
    const double den = pi * t * (1.0 - (4.0 * alpha * t) * (4.0 * alpha * t));
    return num / den;
}

DiscretePulse rrc_taps(double alpha, int oversampling, int span)
{
    if (oversampling < 1 || span < 1)
        throw ContractViolation("rrc_taps: oversampling and span must be >= 1");
    PulseSpec spec;
    spec.kind = PulseKind::Rrc;
    spec.rolloff = alpha;
    spec.span = span;
    return sample_pulse(spec, oversampling);
}

std::vector<double> phydyas_coefficients(bool strict_p3)
{
    const double p1 = 0.97195983;
    const double p3 = strict_p3 ? std::sqrt(1.0 - p1) : std::sqrt(1.0 - p1 * p1);
    return {1.0, p1, 1.0 / std::sqrt(2.0), p3};
}

DiscretePulse phydyas_taps(int subcarriers, int oversampling, bool strict_p3, int overlap)
{
    if (subcarriers < 1 || oversampling < 1)
        throw ContractViolation("phydyas_taps: M_s and oversampling must be >= 1");
    PulseSpec spec;
    spec.kind = PulseKind::Phydyas;
    spec.subcarriers = subcarriers;
    spec.strict_p3 = strict_p3;
    spec.overlap = overlap;
    return sample_pulse(spec, oversampling);
}

double chebyshev(int n, double x)
{
    if (std::abs(x) <= 1.0)
        return std::cos(n * std::acos(x));
    const double v = std::cosh(n * std::acosh(std::abs(x)));
    return (x < 0.0 && n % 2 == 1) ? -v : v;
}

DiscretePulse dc_taps(int n, double attenuation_db)
{
    DolphChebyshev p(n, attenuation_db);
    DiscretePulse out;
    out.oversampling = dc_native_oversampling(n);
    const int h = (n - 1) / 2;
    out.taps.resize(n);
    for (int i = -h; i <= h; ++i)
        out.taps[i + h] = p(i);
    return out;
}

DiscretePulse sample_pulse(const PulseSpec &spec, double oversampling)
{
    if (!(oversampling > 0.0))
        throw ContractViolation("sample_pulse: oversampling must be positive");

    DiscretePulse out;
    out.oversampling = oversampling;

    switch (spec.kind)
    {
    case PulseKind::Rrc:
    {
        if (spec.span < 1)
            throw ContractViolation("rrc: span must be >= 1");
        const long h = half_length(spec.span, oversampling, false);
        out.taps.resize(2 * h + 1);
        double energy = 0.0;
        for (long m = -h; m <= h; ++m)
        {
            const double v = rrc_value(spec.rolloff, static_cast<double>(m) / oversampling);
            out.taps[m + h] = v;
            energy += v * v;
        }
        for (auto &v : out.taps)
            v /= std::sqrt(energy);
        break;
    }
    case PulseKind::Phydyas:
    {
        const int k_overlap = spec.overlap;
        if (k_overlap < 2 || k_overlap > 4)
            throw ContractViolation("phydyas: overlap K must lie in [2, 4]");
        const auto coeff = phydyas_coefficients(spec.strict_p3);
        // Native index n = 0..K M - 2 maps to t = (n + 1) / M - K / 2 symbol intervals
        const double limit = std::min(0.5 * k_overlap, spec.truncation);
        const long h = half_length(limit, oversampling, limit >= 0.5 * k_overlap);
        out.taps.resize(2 * h + 1);
        for (long m = -h; m <= h; ++m)
        {
            const double t = static_cast<double>(m) / oversampling;
            double acc = coeff[0];
            for (int k = 1; k < k_overlap; ++k)
                acc += 2.0 * ((k % 2) ? -1.0 : 1.0) * coeff[k] * std::cos(2.0 * pi * k * (t + 0.5 * k_overlap) / k_overlap);
            out.taps[m + h] = acc;
        }
        break;
    }
    case PulseKind::DolphChebyshev:
    {
        DolphChebyshev p(spec.taps, spec.attenuation_db);
        const double native = dc_native_oversampling(spec.taps);
        const double half_support = 0.5 * (spec.taps - 1) / native;
        const long h = half_length(half_support, oversampling, false);
        out.taps.resize(2 * h + 1);
        for (long m = -h; m <= h; ++m)
            out.taps[m + h] = p(static_cast<double>(m) * native / oversampling);
        break;
    }
    }
    return out;
}

DiscretePulse make_pulse(const PulseSpec &spec)
{
    if (spec.kind == PulseKind::DolphChebyshev)
        return dc_taps(spec.taps, spec.attenuation_db);
    return sample_pulse(spec, spec.oversampling);
}

std::vector<double> spectrum(const DiscretePulse &p, std::size_t fft_size)
{
    if (p.taps.empty() || fft_size < p.taps.size())
        throw ContractViolation("spectrum: fft_size must be >= tap count");
    ComplexVector x = ComplexVector::Zero(static_cast<Eigen::Index>(fft_size));
    for (std::size_t i = 0; i < p.taps.size(); ++i)
        x[static_cast<Eigen::Index>(i)] = p.taps[i];
    const ComplexVector f = numerics::fft(x, fft_size);

    const double peak = f.cwiseAbs().maxCoeff();
    if (!(peak > 0.0))
        throw MeasurementError("spectrum: pulse has no energy");
    std::vector<double> db(fft_size);
    for (std::size_t i = 0; i < fft_size; ++i)
        db[i] = 20.0 * std::log10(std::max(std::abs(f[static_cast<Eigen::Index>(i)]) / peak, 1e-15));
    return db;
}

double bandwidth(const DiscretePulse &p, double threshold_db)
{
    if (!(threshold_db > 0.0))
        throw ContractViolation("bandwidth: threshold must be a positive attenuation depth");
    const std::size_t nfft = 4 * p.taps.size();
    const auto db = spectrum(p, nfft);

    const double df = 1.0 / static_cast<double>(nfft);
    double f_lo = 0.0, f_hi = 0.0;
    std::size_t above = 0;
    for (std::size_t i = 0; i < nfft; ++i)
    {
        if (db[i] <= -threshold_db)
            continue;
        ++above;
        const double f = (2 * i <= nfft) ? i * df : (static_cast<double>(i) - static_cast<double>(nfft)) * df;
        f_lo = std::min(f_lo, f);
        f_hi = std::max(f_hi, f);
    }
    if (above == nfft)
        throw MeasurementError("bandwidth: spectrum never drops " + std::to_string(threshold_db) + " dB below its peak");
    // Interval ends at the first grid points that satisfy the criterion
    return std::min(1.0, (f_hi - f_lo) + 2.0 * df);
}

std::vector<double> symbol_spaced(const DiscretePulse &p)
{
    const double os = p.oversampling;
    const long step = std::lround(os);
    if (step < 1 || std::abs(os - static_cast<double>(step)) > 1e-9)
        throw ContractViolation("symbol_spaced: oversampling must be an integer");
    if (p.taps.size() % 2 == 0)
        throw ContractViolation("symbol_spaced: tap count must be odd (center-aligned pulse)");

    const long n = static_cast<long>(p.taps.size());
    const long c = n / 2;
    const long reach = c / step;
    std::vector<double> out;
    double energy = 0.0;
    for (long j = -reach; j <= reach; ++j)
    {
        const double v = p.taps[c + j * step];
        out.push_back(v);
        energy += v * v;
    }
    if (!(energy > 0.0))
        throw ContractViolation("symbol_spaced: decimated pulse has zero energy");
    for (auto &v : out)
        v /= std::sqrt(energy);
    return out;
}

double solve_symbol_interval(const PulseSpec &spec, double bandwidth_hz, double threshold_db,
                             double sample_rate_factor, double tolerance)
{
    if (!(bandwidth_hz > 0.0) || !(sample_rate_factor > 2.0))
        throw ContractViolation("solve_symbol_interval: invalid bandwidth or sample rate");

    const double fs = sample_rate_factor * bandwidth_hz;
    auto occupied = [&](double ts) { return bandwidth(sample_pulse(spec, fs * ts), threshold_db) * fs; };

    // Initial bracket from the scale-invariant product B * T_s at the default rate
    const DiscretePulse ref = make_pulse(spec);
    const double guess = bandwidth(ref, threshold_db) * ref.oversampling / bandwidth_hz;
    double lo = 0.5 * guess, hi = 2.0 * guess;
    if (!(occupied(lo) > bandwidth_hz) || occupied(hi) > bandwidth_hz)
        throw MeasurementError("solve_symbol_interval: could not bracket the symbol interval");

    while ((hi - lo) > tolerance * 0.5 * (hi + lo))
    {
        const double mid = 0.5 * (lo + hi);
        if (occupied(mid) > bandwidth_hz)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace sclink::pulses
