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


#include "sclink/channel.hpp"

#include "sclink/errors.hpp"
#include "sclink/rng.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

namespace sclink::channel
{

namespace
{

constexpr double speed_of_light = 299792458.0;

} // namespace

void validate(const ChannelParams &p)
{
    if (!(p.distance > 0.0))
        throw ContractViolation("channel: distance must be positive");
    if (!(p.path_loss_exponent > 2.0))
        throw ContractViolation("channel: path-loss exponent must exceed 2");
    if (p.tap_count < 1 || p.n_tx < 1 || p.n_rx < 1 || p.n_clusters < 1 || p.rays_per_cluster < 1)
        throw ContractViolation("channel: tap, antenna, cluster and ray counts must be >= 1");
    if (!(p.carrier_freq > 0.0) || !(p.bandwidth > 0.0) || !(p.angle_spread >= 0.0))
        throw ContractViolation("channel: carrier, bandwidth and angle spread must be positive");
}

double path_loss(double distance, const ChannelParams &params)
{
    if (!(distance >= 1.0))
        throw OutOfModelError("path_loss: distance " + std::to_string(distance) + " m is below the 1 m reference");
    const double fspl = std::pow(4.0 * std::numbers::pi * params.carrier_freq / speed_of_light, 2.0);
    return fspl * std::pow(distance, params.path_loss_exponent);
}

double path_loss_db(double distance, const ChannelParams &params)
{
    return 10.0 * std::log10(path_loss(distance, params));
}

ComplexVector steering_vector(std::size_t n, double theta)
{
    ComplexVector a(static_cast<Eigen::Index>(n));
    const double phase = std::numbers::pi * std::sin(theta);
    for (std::size_t i = 0; i < n; ++i)
        a[static_cast<Eigen::Index>(i)] = std::polar(1.0, phase * static_cast<double>(i));
    return a;
}

std::vector<Ray> draw_rays(const ChannelParams &params, std::uint64_t seed)
{
    validate(params);
    Rng rng(seed);
    const double ray_power = 1.0 / static_cast<double>(params.n_clusters * params.rays_per_cluster);
    const double half_pi = 0.5 * std::numbers::pi;

    std::vector<Ray> rays;
    rays.reserve(params.n_clusters * params.rays_per_cluster);
    for (std::size_t c = 0; c < params.n_clusters; ++c)
    {
        const double aod = rng.uniform(-half_pi, half_pi);
        const double aoa = rng.uniform(-half_pi, half_pi);
        const double delay = rng.uniform(0.0, static_cast<double>(params.tap_count - 1));
        for (std::size_t r = 0; r < params.rays_per_cluster; ++r)
        {
            Ray ray;
            ray.gain = rng.complex_normal(ray_power);
            ray.aod = aod + rng.laplace(params.angle_spread);
            ray.aoa = aoa + rng.laplace(params.angle_spread);
            ray.delay = delay;
            rays.push_back(ray);
        }
    }
    return rays;
}

MatrixSequence synthesize(const ChannelParams &params, const std::vector<Ray> &rays)
{
    validate(params);
    const auto nr = static_cast<Eigen::Index>(params.n_rx);
    const auto nt = static_cast<Eigen::Index>(params.n_tx);
    MatrixSequence taps(params.tap_count, ComplexMatrix::Zero(nr, nt));
    const double last = static_cast<double>(params.tap_count - 1);

    for (const auto &ray : rays)
    {
        if (!(ray.delay >= 0.0) || ray.delay > last)
            throw ContractViolation("synthesize: ray delay outside [0, P-1]");
        const ComplexMatrix outer = ray.gain * steering_vector(params.n_rx, ray.aoa) *
                                    steering_vector(params.n_tx, ray.aod).adjoint();
        const auto n0 = static_cast<std::size_t>(std::floor(ray.delay));
        const double f = ray.delay - static_cast<double>(n0);
        if (f == 0.0 || n0 + 1 >= params.tap_count)
        {
            taps[n0] += outer;
            continue;
        }
        const double norm = std::sqrt((1.0 - f) * (1.0 - f) + f * f);
        taps[n0] += ((1.0 - f) / norm) * outer;
        taps[n0 + 1] += (f / norm) * outer;
    }
    return taps;
}

ChannelRealization generate(const ChannelParams &params, std::uint64_t seed)
{
    ChannelRealization h;
    const double pl = path_loss(params.distance, params);
    h.path_loss_db = 10.0 * std::log10(pl);
    h.taps = synthesize(params, draw_rays(params, seed));
    const double amplitude = 1.0 / std::sqrt(pl);
    for (auto &t : h.taps)
        t *= amplitude;
    return h;
}

MatrixSequence composite(const MatrixSequence &taps, const std::vector<double> &h_tx, const std::vector<double> &h_rx)
{
    if (taps.empty() || h_tx.empty() || h_rx.empty())
        throw ContractViolation("composite: empty channel or filter");
    if (h_tx.size() != h_rx.size())
        throw ContractViolation("composite: transmit and receive filters must both have P_h taps");

    const std::size_t p = taps.size(), ph = h_tx.size();
    const std::size_t out_len = p + 2 * ph - 1;

    // Combined filter g = h_rx * h_tx of length 2 P_h - 1
    std::vector<double> g(2 * ph - 1, 0.0);
    for (std::size_t i = 0; i < ph; ++i)
        for (std::size_t j = 0; j < ph; ++j)
            g[i + j] += h_rx[i] * h_tx[j];

    MatrixSequence out(out_len, ComplexMatrix::Zero(taps[0].rows(), taps[0].cols()));
    for (std::size_t l = 0; l < p; ++l)
    {
        if (taps[l].rows() != taps[0].rows() || taps[l].cols() != taps[0].cols())
            throw ContractViolation("composite: taps differ in dimension");
        for (std::size_t i = 0; i < g.size(); ++i)
            out[l + i] += g[i] * taps[l];
    }
    return out;
}

void composite(ChannelRealization &h, const std::vector<double> &h_tx, const std::vector<double> &h_rx)
{
    h.composite = composite(h.taps, h_tx, h_rx);
}

double noise_variance(const NoiseSpec &spec, double bandwidth_hz)
{
    if (!(bandwidth_hz > 0.0))
        throw ContractViolation("noise_variance: bandwidth must be positive");
    return std::pow(10.0, (spec.psd_dbm_hz + spec.noise_figure_db) / 10.0) * 1e-3 * bandwidth_hz;
}

void write_dump(std::ostream &os, const MatrixSequence &taps)
{
    const auto rows = taps.empty() ? 0 : taps[0].rows();
    const auto cols = taps.empty() ? 0 : taps[0].cols();
    os << taps.size() << ' ' << rows << ' ' << cols << '\n';
    char buf[64];
    for (const auto &t : taps)
        for (Eigen::Index r = 0; r < rows; ++r)
        {
            for (Eigen::Index c = 0; c < cols; ++c)
            {
                std::snprintf(buf, sizeof buf, "%.17g %.17g", t(r, c).real(), t(r, c).imag());
                os << (c ? " " : "") << buf;
            }
            os << '\n';
        }
}

MatrixSequence read_dump(std::istream &is)
{
    std::size_t p = 0;
    Eigen::Index rows = 0, cols = 0;
    if (!(is >> p >> rows >> cols))
        throw ContractViolation("read_dump: malformed header");
    MatrixSequence taps(p, ComplexMatrix(rows, cols));
    for (auto &t : taps)
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c)
            {
                double re = 0.0, im = 0.0;
                if (!(is >> re >> im))
                    throw ContractViolation("read_dump: truncated body");
                t(r, c) = {re, im};
            }
    return taps;
}

} // namespace sclink::channel
