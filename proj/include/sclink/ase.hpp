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


#ifndef SCLINK_ASE_HPP
#define SCLINK_ASE_HPP

#include "sclink/channel.hpp"
#include "sclink/numerics.hpp"
#include "sclink/pulses.hpp"
#include "sclink/txrx.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sclink::ase
{

// s_hat(n) = A s(n) + z(n), everything not explained by A folded into the Gaussian residual z
struct SoftEstimateModel
{
    ComplexMatrix a;       // M x M
    ComplexMatrix sigma_z; // M x M residual covariance
    std::size_t samples = 0;
};

// Least-squares fit of soft on sent (both M x n, aligned). Throws InsufficientDataError below 10 M^2 samples.
SoftEstimateModel fit_model(const ComplexMatrix &sent, const ComplexMatrix &soft);

struct MiOptions
{
    int exact_limit_bits = 12;     // enumerate all hypotheses up to this many bits per vector
    std::size_t candidates = 256;  // importance-sampled hypotheses per sample above the limit
    double temper = 2.0;           // proposal variance inflation
    double uniform_mix = 0.05;     // proposal mixture weight of the uniform law
    bool optimize_scale = true;    // maximize over the auxiliary-law scale (s = 1 is the plain Gaussian law)
    bool force_sampling = false;   // use importance sampling even when enumeration is affordable
};

struct MiEstimate
{
    double bits = 0.0;     // per vector channel use
    double std_error = 0.0;
    double scale = 0.0;    // optimal auxiliary-law scale
};

// Bound evaluated on chain samples: labels hold M labels per vector symbol (stream-fastest), soft is M x n.
// Symbols are sqrt(es) * constellation points.
MiEstimate mi_lower_bound(const SoftEstimateModel &model, const txrx::Constellation &c, double es,
                          const std::vector<std::uint32_t> &labels, const ComplexMatrix &soft, std::uint64_t seed,
                          const MiOptions &opt = {});

// Bound evaluated on n_samples draws from the model itself (s_hat = A s + z, z ~ CN(0, Sigma_z))
MiEstimate mi_lower_bound(const SoftEstimateModel &model, const txrx::Constellation &c, double es,
                          std::size_t n_samples, std::uint64_t seed, const MiOptions &opt = {});

// bit/s/Hz
double ase(double mi_bits, double symbol_interval, double bandwidth_hz, double overhead = 1.0);

enum class Transceiver
{
    Tde,
    Fde
};

std::string to_string(Transceiver t);
Transceiver transceiver_from_string(const std::string &name); // "tde", "fde"

struct LinkConfig
{
    Transceiver transceiver = Transceiver::Tde;
    pulses::PulseSpec pulse;
    double oob_threshold_db = 40.0;
    double symbol_interval = 0.0; // seconds, 0 solves it from the pulse and bandwidth

    int order = 4;
    std::size_t m = 1;
    double pt_dbw = 0.0;

    channel::ChannelParams channel;
    channel::NoiseSpec noise;

    std::size_t n_symbols = 20000; // vector symbols per realization

    std::size_t tde_delay = 0;

    std::size_t fde_k = 512;
    std::size_t fde_cp = 0; // vector symbols, 0 selects P~ - 1
    bool fde_mmse = false;
    bool charge_cp = true;

    MiOptions mi;
};

// Quantities derived once per configuration
struct PreparedLink
{
    LinkConfig config;
    txrx::Constellation constellation;
    std::vector<double> shaping;    // symbol-spaced h_TX = h_RX
    double symbol_interval = 0.0;
    double sigma2 = 0.0;
    double pt = 0.0;                // watts
    std::size_t composite_len = 0;  // P~
    std::size_t cp = 0;
    double overhead = 1.0;
};

PreparedLink prepare(const LinkConfig &config);

struct RealizationResult
{
    double mi = 0.0;
    bool singular = false;
    std::size_t singular_bin = 0;
};

// One channel realization through the full chain. Streams derive from (seed, index).
RealizationResult simulate_realization(const PreparedLink &link, std::size_t index, std::uint64_t seed);

struct AseResult
{
    double mi_per_use = 0.0; // bits, mean over realizations without singular bins
    double ase = 0.0;        // bit/s/Hz
    double std_error = 0.0;  // bits
    double ase_std_error = 0.0;
    std::size_t realizations = 0;
    std::size_t singular_realizations = 0;
    double symbol_interval = 0.0;
    double overhead = 1.0;
    std::vector<double> mi_values; // per realization, NaN where a singular bin aborted it
};

AseResult ergodic_ase(const LinkConfig &config, std::size_t n_realizations, std::uint64_t seed, std::size_t workers = 1);
AseResult ergodic_ase(const PreparedLink &link, std::size_t n_realizations, std::uint64_t seed, std::size_t workers = 1);

} // namespace sclink::ase

#endif
