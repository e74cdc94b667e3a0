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


#include "sclink/harness/sweep.hpp"

#include "sclink/errors.hpp"
#include "sclink/rng.hpp"

#include <chrono>
#include <cstdio>

namespace sclink::harness
{

ase::LinkConfig point_config(const ExperimentConfig &cfg, double value)
{
    ase::LinkConfig link = cfg.link;
    if (cfg.axis == Axis::Distance)
        link.channel.distance = value;
    else
        link.pt_dbw = value;
    return link;
}

std::uint64_t point_seed(const ExperimentConfig &cfg, std::size_t i)
{
    return cfg.common_random_numbers ? cfg.seed : derive_seed(cfg.seed, {0x5eedULL, i});
}

SweepResult run_sweep(const ExperimentConfig &cfg)
{
    validate(cfg);
    SweepResult out;
    out.axis = cfg.axis;

    // The symbol interval does not depend on the sweep axis; solve it once
    ase::LinkConfig base = cfg.link;
    if (!(base.symbol_interval > 0.0))
        base.symbol_interval =
            pulses::solve_symbol_interval(base.pulse, base.channel.bandwidth, base.oob_threshold_db);

    ExperimentConfig solved = cfg;
    solved.link = base;
    for (std::size_t i = 0; i < cfg.grid.size(); ++i)
    {
        const double value = cfg.grid[i];
        const auto t0 = std::chrono::steady_clock::now();
        ase::AseResult r;
        try
        {
            r = ase::ergodic_ase(point_config(solved, value), cfg.realizations, point_seed(cfg, i), cfg.workers);
        }
        catch (const Error &e)
        {
            char ctx[96];
            std::snprintf(ctx, sizeof ctx, "grid point %zu (%s=%g): ", i, to_string(cfg.axis).c_str(), value);
            throw Error(e.kind(), ctx + std::string(e.what()));
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        SweepRow row;
        row.axis = value;
        row.ase_mean = r.ase;
        row.ase_stderr = r.ase_std_error;
        row.mi_mean = r.mi_per_use;
        row.singular_bins = r.singular_realizations;
        row.seconds = cfg.record_time ? seconds : 0.0;
        out.rows.push_back(row);
    }
    return out;
}

} // namespace sclink::harness
