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


// Command-line front end: single runs, distance and power sweeps, pulse spectra and the
// TDE/FDE benchmark. Results go to CSV (or JSON for bench); failures print one JSON line on stderr.

#include "sclink/errors.hpp"
#include "sclink/harness/bench.hpp"
#include "sclink/harness/config.hpp"
#include "sclink/harness/sweep.hpp"
#include "sclink/pulses.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace sclink;

namespace
{

struct Overrides
{
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> workers;
    std::optional<std::string> transceiver, pulse, grid;
    std::optional<int> order;
    std::optional<std::size_t> m, nt, nr, realizations;
    std::optional<double> ptdbw, distance;
    bool no_time = false;
};

void add_common(CLI::App *cmd, Overrides &o)
{
    cmd->add_option("--config", o.config, "JSON configuration file");
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--workers", o.workers, "Worker threads");
    cmd->add_option("--transceiver", o.transceiver, "tde or fde")->check(CLI::IsMember({"tde", "fde"}));
    cmd->add_option("--pulse", o.pulse, "rrc, phydyas or dc")->check(CLI::IsMember({"rrc", "phydyas", "dc"}));
    cmd->add_option("--order", o.order, "QAM order")->check(CLI::IsMember({4, 16, 64}));
    cmd->add_option("--m", o.m, "Multiplexing order");
    cmd->add_option("--nt", o.nt, "Transmit antennas");
    cmd->add_option("--nr", o.nr, "Receive antennas");
    cmd->add_option("--ptdbw", o.ptdbw, "Transmit power in dBW");
    cmd->add_option("--distance", o.distance, "Link distance in meters");
    cmd->add_option("--realizations", o.realizations, "Channel realizations per point");
    cmd->add_option("--grid", o.grid, "Comma-separated sweep grid");
    cmd->add_flag("--no-time", o.no_time, "Write 0 in the seconds column (byte-stable output)");
}

std::vector<double> parse_grid(const std::string &text)
{
    std::vector<double> grid;
    std::stringstream ss(text);
    for (std::string cell; std::getline(ss, cell, ',');)
    {
        try
        {
            grid.push_back(std::stod(cell));
        }
        catch (const std::exception &)
        {
            throw ConfigError("bad grid value '" + cell + "'");
        }
    }
    return grid;
}

harness::ExperimentConfig build_config(const Overrides &o, std::optional<harness::Axis> axis)
{
    nlohmann::json j = nlohmann::json::object();
    if (!o.config.empty())
    {
        std::ifstream in(o.config);
        if (!in)
            throw ConfigError("cannot open configuration file '" + o.config + "'");
        try
        {
            j = nlohmann::json::parse(in);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw ConfigError(std::string("malformed configuration: ") + e.what());
        }
    }
    if (axis)
        j["sweep"]["axis"] = harness::to_string(*axis);
    if (o.grid)
        j["sweep"]["grid"] = parse_grid(*o.grid);
    if (o.seed)
        j["seed"] = *o.seed;
    if (o.workers)
        j["workers"] = *o.workers;
    if (o.transceiver)
        j["link"]["transceiver"] = *o.transceiver;
    if (o.pulse)
        j["pulse"]["kind"] = *o.pulse;
    if (o.order)
        j["link"]["order"] = *o.order;
    if (o.m)
        j["link"]["m"] = *o.m;
    if (o.nt)
        j["channel"]["nt"] = *o.nt;
    if (o.nr)
        j["channel"]["nr"] = *o.nr;
    if (o.ptdbw)
        j["link"]["pt_dbw"] = *o.ptdbw;
    if (o.distance)
        j["channel"]["distance"] = *o.distance;
    if (o.realizations)
        j["monte_carlo"]["realizations"] = *o.realizations;
    if (o.no_time)
        j["record_time"] = false;

    auto cfg = harness::config_from_json(j);
    // A single run is a one-point sweep at the configured distance
    if (!axis)
    {
        cfg.axis = harness::Axis::Distance;
        cfg.grid = {cfg.link.channel.distance};
        harness::validate(cfg);
    }
    return cfg;
}

void write_sweep(const harness::SweepResult &r, const std::string &out)
{
    if (out.empty())
        harness::write_csv(std::cout, r);
    else
        harness::emit_csv(r, out);
}

void pulse_spectra(const std::string &out, std::size_t fft_size)
{
    std::ostringstream os;
    os << "pulse,frequency_normalized,magnitude_db\n";
    char buf[128];
    for (auto kind : {pulses::PulseKind::Rrc, pulses::PulseKind::Phydyas, pulses::PulseKind::DolphChebyshev})
    {
        pulses::PulseSpec spec;
        spec.kind = kind;
        const auto p = pulses::make_pulse(spec);
        const std::size_t n = std::max(fft_size, p.taps.size());
        const auto db = pulses::spectrum(p, n);
        // Frequencies in units of the symbol rate, ascending from -fs/2
        for (std::size_t i = 0; i < n; ++i)
        {
            const std::size_t bin = (i + (n + 1) / 2) % n;
            const double f = (2 * bin < n ? static_cast<double>(bin) : static_cast<double>(bin) - static_cast<double>(n)) /
                             static_cast<double>(n) * p.oversampling;
            std::snprintf(buf, sizeof buf, "%s,%.9g,%.9g\n", pulses::to_string(kind).c_str(), f, db[bin]);
            os << buf;
        }
    }
    if (out.empty())
        std::cout << os.str();
    else
    {
        std::ofstream f(out, std::ios::binary);
        if (!f)
            throw ContractViolation("cannot open '" + out + "' for writing");
        f << os.str();
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"sclink: MIMO millimeter-wave single-carrier link simulator"};
    app.require_subcommand(1);

    Overrides o;
    std::string out;
    std::size_t fft_size = 1024;
    harness::BenchConfig bench;

    auto *single = app.add_subcommand("single-run", "Ergodic ASE at one operating point");
    auto *sweep_d = app.add_subcommand("sweep-distance", "ASE versus distance");
    auto *sweep_p = app.add_subcommand("sweep-power", "ASE versus transmit power");
    for (auto *cmd : {single, sweep_d, sweep_p})
    {
        add_common(cmd, o);
        cmd->add_option("--out", out, "Output CSV path (stdout when omitted)");
    }

    auto *spectra = app.add_subcommand("pulse-spectra", "Magnitude spectra of the three pulses");
    spectra->add_option("--out", out, "Output CSV path");
    spectra->add_option("--fft", fft_size, "FFT size");

    auto *bench_cmd = app.add_subcommand("bench", "TDE versus FDE receiver timing");
    bench_cmd->add_option("--out", out, "Output JSON path");
    bench_cmd->add_option("--n", bench.n, "Antennas per side");
    bench_cmd->add_option("--m", bench.m, "Multiplexing order");
    bench_cmd->add_option("--k", bench.k, "Block length");
    bench_cmd->add_option("--ptilde", bench.composite_len, "Composite channel length");
    bench_cmd->add_option("--blocks", bench.n_blocks, "Blocks per frame");
    bench_cmd->add_option("--repeats", bench.repeats, "Best-of repetitions");
    bench_cmd->add_option("--seed", bench.seed, "Seed");
    bench_cmd->add_option("--build-sizes", bench.build_sizes, "P~ M values for the TDE build fit")->delimiter(',');

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        nlohmann::json err = {{"error", "usage"}, {"message", e.what()}};
        std::cerr << err.dump() << std::endl;
        return 2;
    }

    try
    {
        if (single->parsed())
            write_sweep(harness::run_sweep(build_config(o, std::nullopt)), out);
        else if (sweep_d->parsed())
            write_sweep(harness::run_sweep(build_config(o, harness::Axis::Distance)), out);
        else if (sweep_p->parsed())
            write_sweep(harness::run_sweep(build_config(o, harness::Axis::Power)), out);
        else if (spectra->parsed())
            pulse_spectra(out, fft_size);
        else if (bench_cmd->parsed())
        {
            const auto report = harness::to_json(harness::benchmark(bench)).dump(2);
            if (out.empty())
                std::cout << report << std::endl;
            else
                std::ofstream(out) << report << std::endl;
        }
    }
    catch (const Error &e)
    {
        nlohmann::json err = {{"error", e.kind()}, {"message", e.what()}};
        std::cerr << err.dump() << std::endl;
        return 1;
    }
    catch (const std::exception &e)
    {
        nlohmann::json err = {{"error", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << std::endl;
        return 1;
    }
    return 0;
}
