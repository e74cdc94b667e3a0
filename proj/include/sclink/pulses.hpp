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


#ifndef SCLINK_PULSES_HPP
#define SCLINK_PULSES_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace sclink::pulses
{

enum class PulseKind
{
    Rrc,
    Phydyas,
    DolphChebyshev
};

std::string to_string(PulseKind kind);
PulseKind pulse_kind_from_string(const std::string &name); // "rrc", "phydyas", "dc"

struct PulseSpec
{
    PulseKind kind = PulseKind::DolphChebyshev;

    double rolloff = 0.22; // RRC
    int span = 16;         // RRC, one-sided truncation in symbol intervals

    int overlap = 4;         // PHYDYAS K
    int subcarriers = 16;    // PHYDYAS M_s, also its native samples per symbol
    bool strict_p3 = false;  // PHYDYAS: P3 = sqrt(1 - P1) as printed instead of sqrt(1 - P1^2)
    double truncation = 4.0; // PHYDYAS, one-sided support limit in symbol intervals

    int taps = 255;               // DC N, odd
    double attenuation_db = -50.0; // DC A, negative

    int oversampling = 16; // samples per symbol for RRC and PHYDYAS
};

struct DiscretePulse
{
    std::vector<double> taps;
    double oversampling = 1.0;    // samples per symbol interval
    double symbol_interval = 0.0; // seconds, 0 when not yet solved
};

// Closed-form RRC with T = 1, t in symbol intervals (not normalized)
double rrc_value(double alpha, double t);

// Unit-energy RRC sampled over [-span, span] symbols: 2 * span * oversampling + 1 taps
DiscretePulse rrc_taps(double alpha, int oversampling, int span);

// PHYDYAS frequency-sampling coefficients P0..P3 (K = 4)
std::vector<double> phydyas_coefficients(bool strict_p3 = false);

// PHYDYAS prototype evaluated at `oversampling` samples per symbol. With oversampling == M_s this is
// the native K * M_s - 1 tap design; other rates re-evaluate the same continuous cosine sum.
DiscretePulse phydyas_taps(int subcarriers, int oversampling, bool strict_p3 = false, int overlap = 4);

// Chebyshev polynomial of the first kind, cos branch for |x| <= 1 and cosh branch beyond
double chebyshev(int n, double x);

// Dolph-Chebyshev pulse with N taps and side-lobe attenuation A (dB, negative).
// The pulse spans 4 symbol intervals: oversampling = (N + 1) / 4.
DiscretePulse dc_taps(int n, double attenuation_db);

// Pulse described by `spec` evaluated at a (possibly fractional) number of samples per symbol
DiscretePulse sample_pulse(const PulseSpec &spec, double oversampling);

// Pulse at its default rate (spec.oversampling for RRC and PHYDYAS, native rate for DC)
DiscretePulse make_pulse(const PulseSpec &spec);

// Zero-padded FFT magnitude in dB, 0 dB peak, FFT bin order (bin m <-> m / fft_size cycles/sample)
std::vector<double> spectrum(const DiscretePulse &p, std::size_t fft_size);

// Two-sided width (cycles per sample) of the smallest interval outside which the spectrum stays at
// or below -threshold_db. Evaluated on a 4x zero-padded FFT grid. Throws MeasurementError.
double bandwidth(const DiscretePulse &p, double threshold_db = 40.0);

// Symbol-rate decimation through the center tap, unit energy. Requires integer oversampling.
std::vector<double> symbol_spaced(const DiscretePulse &p);

// Symbol interval T_s (seconds) at which the pulse occupies `bandwidth_hz` under the threshold
// criterion. Bisection on T_s with the sample rate fixed at sample_rate_factor * bandwidth_hz.
double solve_symbol_interval(const PulseSpec &spec, double bandwidth_hz, double threshold_db = 40.0,
                             double sample_rate_factor = 64.0, double tolerance = 1e-3);

} // namespace sclink::pulses

#endif
