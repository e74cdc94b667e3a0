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


#include "sclink/ase.hpp"

#include "sclink/errors.hpp"
#include "sclink/fde.hpp"
#include "sclink/parallel.hpp"
#include "sclink/rng.hpp"
#include "sclink/tde.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace sclink::ase
{

namespace
{

// Sums of the per-sample penalty p_n(s) = log(1 + sum_j c_j exp(-s delta_j) / P_t) >= 0 and the
// first two derivatives of the objective f_n(s) = -log P_t - p_n(s)
struct Accum
{
    double p = 0.0, g = 0.0, h = 0.0, p2 = 0.0;
    std::size_t n = 0;
};

// delta_j = d_j - d_true (whitened squared distances). p_n >= 0 holds in floating point as well:
// the largest term enters the sum as exp(0) = 1.
void add_sample(double s, double log_pt, const double *log_c, double log_c_const, const double *delta, std::size_t cnt,
                std::vector<double> &scratch, Accum &acc)
{
    scratch.resize(cnt);
    double amax = log_pt;
    for (std::size_t j = 0; j < cnt; ++j)
    {
        scratch[j] = (log_c ? log_c[j] : log_c_const) - s * delta[j];
        amax = std::max(amax, scratch[j]);
    }
    double sum = std::exp(log_pt - amax), s1 = 0.0, s2 = 0.0;
    for (std::size_t j = 0; j < cnt; ++j)
    {
        const double e = std::exp(scratch[j] - amax);
        sum += e;
        s1 += e * delta[j];
        s2 += e * delta[j] * delta[j];
    }
    const double p = (amax - log_pt) + std::log(sum);
    const double g = s1 / sum;
    acc.p += p;
    acc.p2 += p * p;
    acc.g += g;
    acc.h -= s2 / sum - g * g;
    ++acc.n;
}

// Maximizes the concave mean objective over s >= 0 (or evaluates at s = 1). At s = 0 the objective
// is exactly zero (the weights c_j sum to 1 - P_t), so that point enters with its exact value.
MiEstimate optimize(const std::function<Accum(double)> &eval, double ceiling_bits, bool optimize_scale)
{
    auto finish = [ceiling_bits](const Accum &a, double s)
    {
        MiEstimate est;
        const double n = static_cast<double>(a.n);
        const double mean = a.p / n;
        const double var = std::max(0.0, a.p2 / n - mean * mean);
        est.bits = ceiling_bits - mean / std::numbers::ln2;
        est.std_error = std::sqrt(var / std::max(1.0, n - 1.0)) / std::numbers::ln2;
        est.scale = s;
        return est;
    };
    const MiEstimate at_zero{0.0, 0.0, 0.0};

    if (!optimize_scale)
        return finish(eval(1.0), 1.0);

    const Accum a0 = eval(0.0);
    if (!(a0.g > 0.0))
        return at_zero;

    double lo = 0.0, hi = 1.0;
    Accum ahi = eval(hi);
    while (ahi.g > 0.0 && hi < 1e12)
    {
        lo = hi;
        hi *= 4.0;
        ahi = eval(hi);
    }
    if (ahi.g > 0.0)
    {
        const MiEstimate e = finish(ahi, hi);
        return e.bits > 0.0 ? e : at_zero;
    }

    double s = 0.5 * (lo + hi);
    Accum a = eval(s);
    for (int it = 0; it < 100; ++it)
    {
        if (a.g > 0.0)
            lo = s;
        else
            hi = s;
        double next = (a.h < 0.0) ? s - a.g / a.h : 0.5 * (lo + hi);
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);
        const bool done = std::abs(next - s) <= 1e-9 * std::max(1.0, s) || (hi - lo) <= 1e-12 * hi;
        s = next;
        a = eval(s);
        if (done)
            break;
    }
    const MiEstimate e = finish(a, s);
    return e.bits > 0.0 ? e : at_zero;
}

struct Whitened
{
    ComplexMatrix y; // M x n whitened observations
    ComplexMatrix b; // M x M whitened signal matrix, includes sqrt(es)
};

Whitened whiten(const SoftEstimateModel &model, double es, const ComplexMatrix &soft)
{
    const Eigen::Index m = model.a.rows();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(model.sigma_z);
    double floor = 1e-12 * (model.sigma_z.trace().real() + es * model.a.squaredNorm());
    if (!(floor > 0.0))
        floor = std::numeric_limits<double>::min();
    RealVector inv_sqrt(m);
    for (Eigen::Index i = 0; i < m; ++i)
        inv_sqrt[i] = 1.0 / std::sqrt(std::max(eig.eigenvalues()[i], floor));
    const ComplexMatrix w = inv_sqrt.asDiagonal() * eig.eigenvectors().adjoint();
    return {w * soft, std::sqrt(es) * w * model.a};
}

std::size_t int_pow(std::size_t base, std::size_t e)
{
    std::size_t r = 1;
    while (e--)
        r *= base;
    return r;
}

MiEstimate exact_bound(const Whitened &wh, const txrx::Constellation &c, const std::vector<std::uint32_t> &labels,
                       bool optimize_scale)
{
    const Eigen::Index m = wh.b.rows();
    const Eigen::Index n = wh.y.cols();
    const std::size_t order = c.points.size();
    const std::size_t hyp = int_pow(order, static_cast<std::size_t>(m));

    ComplexMatrix pts(m, static_cast<Eigen::Index>(hyp));
    for (std::size_t h = 0; h < hyp; ++h)
    {
        std::size_t r = h;
        for (Eigen::Index i = 0; i < m; ++i, r /= order)
            pts(i, static_cast<Eigen::Index>(h)) = c.points[r % order];
    }
    const ComplexMatrix centers = wh.b * pts;
    const RealVector cnorm = centers.colwise().squaredNorm().transpose();

    std::vector<std::size_t> truth(static_cast<std::size_t>(n));
    for (Eigen::Index t = 0; t < n; ++t)
    {
        std::size_t h = 0, mul = 1;
        for (Eigen::Index i = 0; i < m; ++i, mul *= order)
            h += labels[static_cast<std::size_t>(t * m + i)] * mul;
        truth[static_cast<std::size_t>(t)] = h;
    }

    const double log_p = -static_cast<double>(m) * std::log(static_cast<double>(order));
    constexpr Eigen::Index chunk = 512;
    const bool cache = static_cast<double>(hyp) * static_cast<double>(n) <= double(1 << 24);

    // delta(h, t) = d_h - d_true with d_h = |y|^2 - 2 Re(c_h^H y) + |c_h|^2
    auto fill = [&](Eigen::Index t0, Eigen::Index cnt, Eigen::MatrixXd &delta)
    {
        const ComplexMatrix cross = centers.adjoint() * wh.y.middleCols(t0, cnt);
        delta.resize(static_cast<Eigen::Index>(hyp), cnt);
        for (Eigen::Index j = 0; j < cnt; ++j)
        {
            const auto tr = static_cast<Eigen::Index>(truth[static_cast<std::size_t>(t0 + j)]);
            const double dt = -2.0 * cross(tr, j).real() + cnorm[tr];
            for (Eigen::Index h = 0; h < static_cast<Eigen::Index>(hyp); ++h)
                delta(h, j) = -2.0 * cross(h, j).real() + cnorm[h] - dt;
        }
    };

    std::vector<Eigen::MatrixXd> cached;
    if (cache)
        for (Eigen::Index t0 = 0; t0 < n; t0 += chunk)
        {
            cached.emplace_back();
            fill(t0, std::min(chunk, n - t0), cached.back());
        }

    // The true hypothesis enters through log_pt; its own delta is 0 and is skipped via a large log_c offset
    auto eval = [&](double s)
    {
        Accum acc;
        std::vector<double> scratch;
        Eigen::MatrixXd local;
        for (Eigen::Index t0 = 0, ci = 0; t0 < n; t0 += chunk, ++ci)
        {
            const Eigen::Index cnt = std::min(chunk, n - t0);
            if (!cache)
                fill(t0, cnt, local);
            Eigen::MatrixXd &delta = cache ? cached[static_cast<std::size_t>(ci)] : local;
            for (Eigen::Index j = 0; j < cnt; ++j)
            {
                const auto tr = static_cast<Eigen::Index>(truth[static_cast<std::size_t>(t0 + j)]);
                double *col = delta.col(j).data();
                // Remove the true hypothesis from the candidate list by swapping it to the end
                std::swap(col[tr], col[hyp - 1]);
                add_sample(s, log_p, nullptr, log_p, col, hyp - 1, scratch, acc);
                std::swap(col[tr], col[hyp - 1]);
            }
        }
        return acc;
    };
    return optimize(eval, static_cast<double>(m * c.bits), optimize_scale);
}

MiEstimate sampled_bound(const Whitened &wh, const txrx::Constellation &c, const std::vector<std::uint32_t> &labels,
                         std::uint64_t seed, const MiOptions &opt)
{
    const Eigen::Index m = wh.b.rows();
    const Eigen::Index n = wh.y.cols();
    const std::size_t order = c.points.size();
    const std::size_t k = std::max<std::size_t>(opt.candidates, 1);
    const double log_order = std::log(static_cast<double>(order));
    const double log_p = -static_cast<double>(m) * log_order;
    const double log_k = std::log(static_cast<double>(k));

    // Per-stream proposals from the zero-forcing estimate of the whitened observation
    const ComplexMatrix pinv = wh.b.completeOrthogonalDecomposition().pseudoInverse();
    const ComplexMatrix z = pinv * wh.y;
    const RealVector var = (pinv * pinv.adjoint()).diagonal().real();

    Rng rng(seed);
    std::vector<double> log_c(static_cast<std::size_t>(n) * k), delta(static_cast<std::size_t>(n) * k);
    std::vector<std::size_t> count(static_cast<std::size_t>(n));
    std::vector<double> prob(static_cast<std::size_t>(m) * order), logw(k), dist(k);
    std::vector<std::uint32_t> draw(static_cast<std::size_t>(m));
    ComplexVector sym(m);

    for (Eigen::Index t = 0; t < n; ++t)
    {
        for (Eigen::Index i = 0; i < m; ++i)
        {
            double *p = &prob[static_cast<std::size_t>(i) * order];
            const double v = std::max(opt.temper * var[i], 1e-300);
            double mx = -INFINITY;
            for (std::size_t x = 0; x < order; ++x)
            {
                p[x] = -std::norm(z(i, t) - c.points[x]) / v;
                mx = std::max(mx, p[x]);
            }
            double sum = 0.0;
            for (std::size_t x = 0; x < order; ++x)
                sum += (p[x] = std::exp(p[x] - mx));
            for (std::size_t x = 0; x < order; ++x)
                p[x] = (1.0 - opt.uniform_mix) * p[x] / sum + opt.uniform_mix / static_cast<double>(order);
        }

        for (Eigen::Index i = 0; i < m; ++i)
            sym[i] = c.points[labels[static_cast<std::size_t>(t * m + i)]];
        const double d_true = (wh.y.col(t) - wh.b * sym).squaredNorm();

        std::size_t used = 0;
        for (std::size_t j = 0; j < k; ++j)
        {
            double logq = 0.0;
            bool same = true;
            for (Eigen::Index i = 0; i < m; ++i)
            {
                const double *p = &prob[static_cast<std::size_t>(i) * order];
                double u = rng.uniform();
                std::size_t x = 0;
                while (x + 1 < order && u >= p[x])
                    u -= p[x++];
                draw[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x);
                logq += std::log(p[x]);
                sym[i] = c.points[x];
                same = same && x == labels[static_cast<std::size_t>(t * m + i)];
            }
            if (same)
                continue;
            logw[used] = log_p - logq;
            dist[used] = (wh.y.col(t) - wh.b * sym).squaredNorm() - d_true;
            ++used;
        }
        // Unbiased estimate of sum_{x != x_true} P(x) exp(-s delta(x)): weights P/q averaged over all K
        // draws, the ones that hit the transmitted vector contributing zero
        const std::size_t base = static_cast<std::size_t>(t) * k;
        for (std::size_t j = 0; j < used; ++j)
        {
            log_c[base + j] = logw[j] - log_k;
            delta[base + j] = dist[j];
        }
        count[static_cast<std::size_t>(t)] = used;
    }

    auto eval = [&](double s)
    {
        Accum acc;
        std::vector<double> scratch;
        for (Eigen::Index t = 0; t < n; ++t)
        {
            const std::size_t base = static_cast<std::size_t>(t) * k;
            add_sample(s, log_p, &log_c[base], 0.0, &delta[base], count[static_cast<std::size_t>(t)], scratch, acc);
        }
        return acc;
    };
    return optimize(eval, static_cast<double>(m * c.bits), opt.optimize_scale);
}

} // namespace

SoftEstimateModel fit_model(const ComplexMatrix &sent, const ComplexMatrix &soft)
{
    if (sent.rows() != soft.rows() || sent.cols() != soft.cols())
        throw ContractViolation("fit_model: sent and soft sequences differ in shape");
    const Eigen::Index m = sent.rows();
    const Eigen::Index n = sent.cols();
    if (n < 10 * m * m)
        throw InsufficientDataError("fit_model: " + std::to_string(n) + " samples, need at least " +
                                    std::to_string(10 * m * m));

    SoftEstimateModel model;
    model.samples = static_cast<std::size_t>(n);
    const ComplexMatrix rss = sent * sent.adjoint();
    const ComplexMatrix rhs = sent * soft.adjoint();
    // A^H = (S S^H)^-1 S Shat^H
    model.a = numerics::hermitian_solve(rss, rhs).adjoint();
    const ComplexMatrix resid = soft - model.a * sent;
    model.sigma_z = (resid * resid.adjoint()) / static_cast<double>(n);
    model.sigma_z = 0.5 * (model.sigma_z + model.sigma_z.adjoint()).eval();
    return model;
}

MiEstimate mi_lower_bound(const SoftEstimateModel &model, const txrx::Constellation &c, double es,
                          const std::vector<std::uint32_t> &labels, const ComplexMatrix &soft, std::uint64_t seed,
                          const MiOptions &opt)
{
    const Eigen::Index m = model.a.rows();
    if (model.a.cols() != m || model.sigma_z.rows() != m || soft.rows() != m)
        throw ContractViolation("mi_lower_bound: model and observations differ in dimension");
    if (labels.size() != static_cast<std::size_t>(soft.size()))
        throw ContractViolation("mi_lower_bound: need M labels per observation");
    if (!(es > 0.0))
        throw ContractViolation("mi_lower_bound: symbol energy must be positive");
    if (soft.cols() == 0)
        throw InsufficientDataError("mi_lower_bound: no samples");

    const Whitened wh = whiten(model, es, soft);
    const bool exact = !opt.force_sampling && static_cast<long>(m) * c.bits <= opt.exact_limit_bits;
    return exact ? exact_bound(wh, c, labels, opt.optimize_scale) : sampled_bound(wh, c, labels, seed, opt);
}

MiEstimate mi_lower_bound(const SoftEstimateModel &model, const txrx::Constellation &c, double es,
                          std::size_t n_samples, std::uint64_t seed, const MiOptions &opt)
{
    const Eigen::Index m = model.a.rows();
    const auto labels = txrx::random_indices(n_samples * static_cast<std::size_t>(m), c, derive_seed(seed, {1}));
    ComplexMatrix sent(m, static_cast<Eigen::Index>(n_samples));
    for (std::size_t i = 0; i < labels.size(); ++i)
        sent.data()[i] = std::sqrt(es) * c.points[labels[i]];

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(model.sigma_z);
    const ComplexMatrix root = eig.eigenvectors() * eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
    Rng rng(derive_seed(seed, {2}));
    ComplexMatrix noise(m, static_cast<Eigen::Index>(n_samples));
    for (Eigen::Index i = 0; i < noise.size(); ++i)
        noise.data()[i] = rng.complex_normal(1.0);

    const ComplexMatrix soft = model.a * sent + root * noise;
    return mi_lower_bound(model, c, es, labels, soft, derive_seed(seed, {3}), opt);
}

double ase(double mi_bits, double symbol_interval, double bandwidth_hz, double overhead)
{
    if (!(symbol_interval > 0.0) || !(bandwidth_hz > 0.0))
        throw ContractViolation("ase: symbol interval and bandwidth must be positive");
    return overhead * mi_bits / (symbol_interval * bandwidth_hz);
}

std::string to_string(Transceiver t) { return t == Transceiver::Tde ? "tde" : "fde"; }

Transceiver transceiver_from_string(const std::string &name)
{
    if (name == "tde")
        return Transceiver::Tde;
    if (name == "fde")
        return Transceiver::Fde;
    throw ContractViolation("unknown transceiver '" + name + "' (expected tde or fde)");
}

PreparedLink prepare(const LinkConfig &config)
{
    channel::validate(config.channel);
    if (config.m == 0 || config.m > std::min(config.channel.n_tx, config.channel.n_rx))
        throw ContractViolation("link: M must lie in [1, min(N_T, N_R)]");

    PreparedLink link;
    link.config = config;
    link.constellation = txrx::qam(config.order);
    link.shaping = pulses::symbol_spaced(pulses::make_pulse(config.pulse));
    link.symbol_interval = config.symbol_interval > 0.0
                               ? config.symbol_interval
                               : pulses::solve_symbol_interval(config.pulse, config.channel.bandwidth,
                                                               config.oob_threshold_db);
    link.sigma2 = channel::noise_variance(config.noise, config.channel.bandwidth);
    link.pt = std::pow(10.0, config.pt_dbw / 10.0);
    link.composite_len = config.channel.tap_count + 2 * link.shaping.size() - 1;

    if (config.transceiver == Transceiver::Fde)
    {
        if (config.fde_k < link.composite_len)
            throw ContractViolation("link: FDE block length k must cover the composite channel");
        link.cp = config.fde_cp ? config.fde_cp : fde::default_cp_length(link.composite_len);
        if (link.cp + 1 < link.composite_len)
            throw ContractViolation("link: cyclic prefix shorter than the composite channel memory");
        if (config.charge_cp)
            link.overhead = static_cast<double>(config.fde_k) / static_cast<double>(config.fde_k + link.cp);
    }
    else
    {
        if (config.n_symbols <= 2 * link.composite_len)
            throw ContractViolation("link: too few symbols for the TDE edge exclusion");
        if (config.tde_delay >= link.composite_len)
            throw ContractViolation("link: TDE decision delay must be below P~");
    }
    return link;
}

RealizationResult simulate_realization(const PreparedLink &link, std::size_t index, std::uint64_t seed)
{
    const LinkConfig &cfg = link.config;
    const auto m = static_cast<Eigen::Index>(cfg.m);
    const double es = link.pt / static_cast<double>(cfg.m);

    channel::ChannelRealization h = channel::generate(cfg.channel, derive_seed(seed, {index, 1}));
    channel::composite(h, link.shaping, link.shaping);
    const txrx::PrecoderPair pp = txrx::select_precoders(h.composite, cfg.m);

    const bool fde_mode = cfg.transceiver == Transceiver::Fde;
    const std::size_t n_blocks = fde_mode ? (cfg.n_symbols + cfg.fde_k - 1) / cfg.fde_k : 1;
    const std::size_t n_sym = fde_mode ? n_blocks * cfg.fde_k : cfg.n_symbols;

    const auto labels = txrx::random_indices(n_sym * cfg.m, link.constellation, derive_seed(seed, {index, 2}));
    const txrx::SymbolBlock block = txrx::map_symbols(labels, link.constellation, link.pt, cfg.m);
    const ComplexMatrix sent = block.vectors();

    ComplexMatrix soft;
    std::vector<std::uint32_t> kept_labels;
    ComplexMatrix kept_sent;
    RealizationResult result;

    if (!fde_mode)
    {
        const ComplexMatrix y = tde::channel_pass(pp.q * sent, h.composite, link.sigma2, derive_seed(seed, {index, 3}));
        const ComplexMatrix r = tde::postcode(y, pp.d);
        const auto eq = tde::build_lmmse(h.composite, pp.q, pp.d, link.sigma2, link.pt, cfg.m, cfg.tde_delay);
        const ComplexMatrix est = tde::equalize(r, eq, n_sym);

        // Drop the first and last P~ symbols, whose observations are truncated
        const auto edge = static_cast<Eigen::Index>(link.composite_len);
        const Eigen::Index kept = static_cast<Eigen::Index>(n_sym) - 2 * edge;
        soft = est.middleCols(edge, kept);
        kept_sent = sent.middleCols(edge, kept);
        kept_labels.assign(labels.begin() + edge * m, labels.begin() + (edge + kept) * m);
    }
    else
    {
        fde::FdeEqualizer eq;
        try
        {
            eq = fde::build_fde(h.composite, pp.q, pp.d, cfg.fde_k, cfg.fde_mmse, link.sigma2, es);
        }
        catch (const SingularBinError &e)
        {
            result.singular = true;
            result.singular_bin = e.bin();
            result.mi = std::numeric_limits<double>::quiet_NaN();
            return result;
        }
        const auto k = static_cast<Eigen::Index>(cfg.fde_k);
        const auto c = static_cast<Eigen::Index>(link.cp);
        ComplexMatrix frame(m, static_cast<Eigen::Index>(n_blocks) * (k + c));
        for (std::size_t b = 0; b < n_blocks; ++b)
            frame.middleCols(static_cast<Eigen::Index>(b) * (k + c), k + c) =
                fde::add_cp(sent.middleCols(static_cast<Eigen::Index>(b) * k, k), link.cp);
        const ComplexMatrix y = tde::channel_pass(pp.q * frame, h.composite, link.sigma2, derive_seed(seed, {index, 3}));
        soft = fde::fde_receive(y, pp.d, eq, link.cp, n_blocks);
        kept_sent = sent;
        kept_labels = labels;
    }

    // Two-fold cross-fit: the auxiliary law is fitted on one half and evaluated on the other
    const Eigen::Index n = soft.cols();
    const Eigen::Index half = n / 2;
    double mi = 0.0;
    for (int fold = 0; fold < 2; ++fold)
    {
        const Eigen::Index fit0 = fold ? half : 0, fit_n = fold ? n - half : half;
        const Eigen::Index ev0 = fold ? 0 : half, ev_n = fold ? half : n - half;
        const SoftEstimateModel model = fit_model(kept_sent.middleCols(fit0, fit_n), soft.middleCols(fit0, fit_n));
        const std::vector<std::uint32_t> ev_labels(kept_labels.begin() + ev0 * m, kept_labels.begin() + (ev0 + ev_n) * m);
        mi += 0.5 * mi_lower_bound(model, link.constellation, es, ev_labels, soft.middleCols(ev0, ev_n),
                                   derive_seed(seed, {index, 4, static_cast<std::uint64_t>(fold)}), cfg.mi)
                        .bits;
    }
    result.mi = mi;
    return result;
}

AseResult ergodic_ase(const PreparedLink &link, std::size_t n_realizations, std::uint64_t seed, std::size_t workers)
{
    if (n_realizations == 0)
        throw ContractViolation("ergodic_ase: need at least one realization");

    std::vector<RealizationResult> runs(n_realizations);
    parallel_for(n_realizations, workers, [&](std::size_t r) { runs[r] = simulate_realization(link, r, seed); });

    AseResult out;
    out.realizations = n_realizations;
    out.symbol_interval = link.symbol_interval;
    out.overhead = link.overhead;
    double sum = 0.0, sum2 = 0.0;
    std::size_t ok = 0;
    for (const auto &r : runs)
    {
        out.mi_values.push_back(r.mi);
        if (r.singular)
        {
            ++out.singular_realizations;
            continue;
        }
        sum += r.mi;
        sum2 += r.mi * r.mi;
        ++ok;
    }
    if (ok == 0)
    {
        out.mi_per_use = out.ase = out.std_error = out.ase_std_error = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    const double n = static_cast<double>(ok);
    out.mi_per_use = sum / n;
    out.std_error = ok > 1 ? std::sqrt(std::max(0.0, (sum2 - n * out.mi_per_use * out.mi_per_use) / (n - 1.0)) / n) : 0.0;
    const double w = link.config.channel.bandwidth;
    out.ase = ase(out.mi_per_use, link.symbol_interval, w, link.overhead);
    out.ase_std_error = ase(out.std_error, link.symbol_interval, w, link.overhead);
    return out;
}

AseResult ergodic_ase(const LinkConfig &config, std::size_t n_realizations, std::uint64_t seed, std::size_t workers)
{
    return ergodic_ase(prepare(config), n_realizations, seed, workers);
}

} // namespace sclink::ase
