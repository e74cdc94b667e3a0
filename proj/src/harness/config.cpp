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


#include "sclink/harness/config.hpp"

#include "sclink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

namespace sclink::harness
{

namespace
{

using nlohmann::json;

// Reads optional keys of one JSON object and rejects the ones nobody asked for
class Section
{
public:
    Section(const json &root, const std::string &name) : name_(name)
    {
        if (name.empty())
            j_ = &root;
        else if (root.contains(name))
            j_ = &root.at(name);
        if (j_ && !j_->is_object())
            throw ConfigError("section '" + name + "' must be an object");
    }

    template <typename T>
    void get(const std::string &key, T &out)
    {
        seen_.insert(key);
        if (!j_ || !j_->contains(key))
            return;
        try
        {
            out = j_->at(key).get<T>();
        }
        catch (const json::exception &e)
        {
            throw ConfigError(path(key) + ": " + e.what());
        }
    }

    void ignore(const std::string &key) { seen_.insert(key); }

    void finish() const
    {
        if (!j_)
            return;
        for (const auto &item : j_->items())
            if (!seen_.count(item.key()))
                throw ConfigError("unknown configuration key '" + path(item.key()) + "'");
    }

private:
    std::string path(const std::string &key) const { return name_.empty() ? key : name_ + "." + key; }

    const json *j_ = nullptr;
    std::string name_;
    std::set<std::string> seen_;
};

constexpr double deg = std::numbers::pi / 180.0;

} // namespace

std::string to_string(Axis axis) { return axis == Axis::Distance ? "distance" : "power"; }

Axis axis_from_string(const std::string &name)
{
    if (name == "distance")
        return Axis::Distance;
    if (name == "power")
        return Axis::Power;
    throw ConfigError("unknown sweep axis '" + name + "' (expected distance or power)");
}

void validate(const ExperimentConfig &cfg)
{
    if (cfg.grid.empty())
        throw ConfigError("sweep grid is empty");
    if (!std::is_sorted(cfg.grid.begin(), cfg.grid.end()))
        throw ConfigError("sweep grid must be sorted ascending");
    for (double v : cfg.grid)
        if (!std::isfinite(v))
            throw ConfigError("sweep grid contains a non-finite value");
    if (cfg.realizations == 0)
        throw ConfigError("monte_carlo.realizations must be >= 1");
    if (cfg.workers == 0)
        throw ConfigError("workers must be >= 1");
    if (cfg.axis == Axis::Distance && cfg.grid.front() < 1.0)
        throw ConfigError("distance grid starts below the 1 m path-loss reference");
    try
    {
        ase::LinkConfig probe = cfg.link;
        probe.symbol_interval = probe.symbol_interval > 0.0 ? probe.symbol_interval : 1.0; // skip the solve
        ase::prepare(probe);
    }
    catch (const ContractViolation &e)
    {
        throw ConfigError(e.what());
    }
}

ExperimentConfig config_from_json(const json &j)
{
    if (!j.is_object())
        throw ConfigError("configuration root must be an object");

    ExperimentConfig cfg;
    auto &l = cfg.link;

    Section top(j, "");
    for (const char *s : {"link", "pulse", "channel", "noise", "tde", "fde", "mi", "monte_carlo", "sweep"})
        top.ignore(s);
    top.get("seed", cfg.seed);
    top.get("workers", cfg.workers);
    top.get("record_time", cfg.record_time);
    top.finish();

    Section link(j, "link");
    std::string transceiver = ase::to_string(l.transceiver);
    link.get("transceiver", transceiver);
    link.get("order", l.order);
    link.get("m", l.m);
    link.get("pt_dbw", l.pt_dbw);
    link.get("n_symbols", l.n_symbols);
    link.finish();
    try
    {
        l.transceiver = ase::transceiver_from_string(transceiver);
    }
    catch (const ContractViolation &e)
    {
        throw ConfigError(e.what());
    }

    Section pulse(j, "pulse");
    std::string kind = pulses::to_string(l.pulse.kind);
    pulse.get("kind", kind);
    pulse.get("rolloff", l.pulse.rolloff);
    pulse.get("span", l.pulse.span);
    pulse.get("overlap", l.pulse.overlap);
    pulse.get("subcarriers", l.pulse.subcarriers);
    pulse.get("strict_p3", l.pulse.strict_p3);
    pulse.get("truncation", l.pulse.truncation);
    pulse.get("taps", l.pulse.taps);
    pulse.get("attenuation_db", l.pulse.attenuation_db);
    pulse.get("oversampling", l.pulse.oversampling);
    pulse.get("oob_threshold_db", l.oob_threshold_db);
    pulse.get("symbol_interval", l.symbol_interval);
    pulse.finish();
    try
    {
        l.pulse.kind = pulses::pulse_kind_from_string(kind);
    }
    catch (const ContractViolation &e)
    {
        throw ConfigError(e.what());
    }

    Section ch(j, "channel");
    double spread_deg = l.channel.angle_spread / deg;
    ch.get("carrier_freq", l.channel.carrier_freq);
    ch.get("bandwidth", l.channel.bandwidth);
    ch.get("distance", l.channel.distance);
    ch.get("path_loss_exponent", l.channel.path_loss_exponent);
    ch.get("clusters", l.channel.n_clusters);
    ch.get("rays_per_cluster", l.channel.rays_per_cluster);
    ch.get("angle_spread_deg", spread_deg);
    ch.get("taps", l.channel.tap_count);
    ch.get("nt", l.channel.n_tx);
    ch.get("nr", l.channel.n_rx);
    ch.finish();
    l.channel.angle_spread = spread_deg * deg;

    Section noise(j, "noise");
    noise.get("psd_dbm_hz", l.noise.psd_dbm_hz);
    noise.get("noise_figure_db", l.noise.noise_figure_db);
    noise.finish();

    Section tde(j, "tde");
    tde.get("delay", l.tde_delay);
    tde.finish();

    Section fde(j, "fde");
    fde.get("k", l.fde_k);
    fde.get("cp", l.fde_cp);
    fde.get("mmse", l.fde_mmse);
    fde.get("charge_cp", l.charge_cp);
    fde.finish();

    Section mi(j, "mi");
    mi.get("exact_limit_bits", l.mi.exact_limit_bits);
    mi.get("candidates", l.mi.candidates);
    mi.get("temper", l.mi.temper);
    mi.get("uniform_mix", l.mi.uniform_mix);
    mi.get("optimize_scale", l.mi.optimize_scale);
    mi.get("force_sampling", l.mi.force_sampling);
    mi.finish();

    Section mc(j, "monte_carlo");
    mc.get("realizations", cfg.realizations);
    mc.finish();

    Section sweep(j, "sweep");
    std::string axis = to_string(cfg.axis);
    sweep.get("axis", axis);
    sweep.get("grid", cfg.grid);
    sweep.get("common_random_numbers", cfg.common_random_numbers);
    sweep.finish();
    cfg.axis = axis_from_string(axis);

    validate(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open configuration file '" + path + "'");
    json j;
    try
    {
        j = json::parse(in);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError("malformed configuration '" + path + "': " + e.what());
    }
    return config_from_json(j);
}

json to_json(const ExperimentConfig &cfg)
{
    const auto &l = cfg.link;
    json j;
    j["link"] = {{"transceiver", ase::to_string(l.transceiver)},
                 {"order", l.order},
                 {"m", l.m},
                 {"pt_dbw", l.pt_dbw},
                 {"n_symbols", l.n_symbols}};
    j["pulse"] = {{"kind", pulses::to_string(l.pulse.kind)},
                  {"rolloff", l.pulse.rolloff},
                  {"span", l.pulse.span},
                  {"overlap", l.pulse.overlap},
                  {"subcarriers", l.pulse.subcarriers},
                  {"strict_p3", l.pulse.strict_p3},
                  {"truncation", l.pulse.truncation},
                  {"taps", l.pulse.taps},
                  {"attenuation_db", l.pulse.attenuation_db},
                  {"oversampling", l.pulse.oversampling},
                  {"oob_threshold_db", l.oob_threshold_db},
                  {"symbol_interval", l.symbol_interval}};
    j["channel"] = {{"carrier_freq", l.channel.carrier_freq},
                    {"bandwidth", l.channel.bandwidth},
                    {"distance", l.channel.distance},
                    {"path_loss_exponent", l.channel.path_loss_exponent},
                    {"clusters", l.channel.n_clusters},
                    {"rays_per_cluster", l.channel.rays_per_cluster},
                    {"angle_spread_deg", l.channel.angle_spread / deg},
                    {"taps", l.channel.tap_count},
                    {"nt", l.channel.n_tx},
                    {"nr", l.channel.n_rx}};
    j["noise"] = {{"psd_dbm_hz", l.noise.psd_dbm_hz}, {"noise_figure_db", l.noise.noise_figure_db}};
    j["tde"] = {{"delay", l.tde_delay}};
    j["fde"] = {{"k", l.fde_k}, {"cp", l.fde_cp}, {"mmse", l.fde_mmse}, {"charge_cp", l.charge_cp}};
    j["mi"] = {{"exact_limit_bits", l.mi.exact_limit_bits}, {"candidates", l.mi.candidates},
               {"temper", l.mi.temper},                     {"uniform_mix", l.mi.uniform_mix},
               {"optimize_scale", l.mi.optimize_scale},     {"force_sampling", l.mi.force_sampling}};
    j["monte_carlo"] = {{"realizations", cfg.realizations}};
    j["sweep"] = {{"axis", to_string(cfg.axis)},
                  {"grid", cfg.grid},
                  {"common_random_numbers", cfg.common_random_numbers}};
    j["seed"] = cfg.seed;
    j["workers"] = cfg.workers;
    j["record_time"] = cfg.record_time;
    return j;
}

} // namespace sclink::harness
