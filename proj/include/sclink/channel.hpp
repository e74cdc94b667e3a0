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


#ifndef SCLINK_CHANNEL_HPP
#define SCLINK_CHANNEL_HPP

#include "sclink/numerics.hpp"

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <vector>

namespace sclink::channel
{

struct ChannelParams
{
    double carrier_freq = 73e9;       // Hz
    double bandwidth = 500e6;         // Hz
    double distance = 30.0;           // m
    double path_loss_exponent = 3.3;
    std::size_t n_clusters = 3;
    std::size_t rays_per_cluster = 10;
    double angle_spread = 5.0 * std::numbers::pi / 180.0; // rad, Laplacian standard deviation
    std::size_t tap_count = 4;        // P
    std::size_t n_tx = 10;
    std::size_t n_rx = 10;
};

// Validates the ChannelParams invariants. Throws ContractViolation.
void validate(const ChannelParams &params);

struct ChannelRealization
{
    MatrixSequence taps;      // P matrices, N_R x N_T
    MatrixSequence composite; // P + 2 P_h - 1 matrices after shaping filters
    double path_loss_db = 0.0;
};

struct NoiseSpec
{
    double psd_dbm_hz = -174.0;
    double noise_figure_db = 3.0;
};

// One propagation path. Delay in tap units (symbol intervals), angles in radians from broadside.
struct Ray
{
    cdouble gain;
    double aod = 0.0;
    double aoa = 0.0;
    double delay = 0.0;
};

// Free-space loss at 1 m times d^exponent, linear power ratio (> 1). Throws OutOfModelError for d < 1 m.
double path_loss(double distance, const ChannelParams &params);
double path_loss_db(double distance, const ChannelParams &params);

// Uniform linear array response exp(j pi i sin(theta)), half-wavelength spacing, unit-modulus entries
ComplexVector steering_vector(std::size_t n, double theta);

// Draws the clustered ray set: CN(0, 1 / (N_cl N_ray)) gains, cluster-mean angles uniform on
// [-pi/2, pi/2] with Laplacian per-ray offsets, one uniform delay on [0, P-1] per cluster.
std::vector<Ray> draw_rays(const ChannelParams &params, std::uint64_t seed);

// Small-scale taps from explicit rays (no path loss). A fractional delay is split between the two
// neighbouring taps with unit-energy linear interpolation weights.
MatrixSequence synthesize(const ChannelParams &params, const std::vector<Ray> &rays);

// Full realization: rays, taps scaled by the path-loss amplitude. Composite is left empty.
ChannelRealization generate(const ChannelParams &params, std::uint64_t seed);

// h_rx * H * h_tx, entry-wise linear convolution. The result has P + 2 P_h - 1 taps, the last of which
// is zero (the linear convolution itself is one tap shorter).
MatrixSequence composite(const MatrixSequence &taps, const std::vector<double> &h_tx, const std::vector<double> &h_rx);
void composite(ChannelRealization &h, const std::vector<double> &h_tx, const std::vector<double> &h_rx);

// Per-antenna complex noise variance in watts
double noise_variance(const NoiseSpec &spec, double bandwidth_hz);

// Plaintext dump: "P N_R N_T" then row-major re im pairs of each tap, full precision
void write_dump(std::ostream &os, const MatrixSequence &taps);
MatrixSequence read_dump(std::istream &is);

} // namespace sclink::channel

#endif
