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
#include "sclink/harness/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sclink::harness
{

namespace
{

constexpr const char *header = "axis,ase_mean,ase_stderr,mi_mean,singular_bins,seconds";

double parse_double(const std::string &field)
{
    try
    {
        std::size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos != field.size())
            throw std::invalid_argument(field);
        return v;
    }
    catch (const std::exception &)
    {
        throw ContractViolation("read_csv: bad numeric field '" + field + "'");
    }
}

} // namespace

void write_csv(std::ostream &os, const SweepResult &result)
{
    os << header << '\n';
    char buf[256];
    for (const auto &r : result.rows)
    {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g,%zu,%.9g\n", r.axis, r.ase_mean, r.ase_stderr, r.mi_mean,
                      r.singular_bins, r.seconds);
        os << buf;
    }
}

void emit_csv(const SweepResult &result, const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ContractViolation("emit_csv: cannot open '" + path + "' for writing");
    write_csv(out, result);
    if (!out)
        throw ContractViolation("emit_csv: write to '" + path + "' failed");
}

std::vector<SweepRow> read_csv(std::istream &is)
{
    std::string line;
    if (!std::getline(is, line) || line != header)
        throw ContractViolation("read_csv: missing or unexpected header");
    std::vector<SweepRow> rows;
    while (std::getline(is, line))
    {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');)
            f.push_back(cell);
        if (f.size() != 6)
            throw ContractViolation("read_csv: expected 6 fields, got " + std::to_string(f.size()));
        SweepRow r;
        r.axis = parse_double(f[0]);
        r.ase_mean = parse_double(f[1]);
        r.ase_stderr = parse_double(f[2]);
        r.mi_mean = parse_double(f[3]);
        r.singular_bins = static_cast<std::size_t>(parse_double(f[4]));
        r.seconds = parse_double(f[5]);
        rows.push_back(r);
    }
    return rows;
}

std::vector<SweepRow> read_csv(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ContractViolation("read_csv: cannot open '" + path + "'");
    return read_csv(in);
}

} // namespace sclink::harness
