// SPDX-License-Identifier: Apache-2.0
//
// risfocus - inter-RIS beam focusing codebook construction and evaluation
// Copyright (C) 2026 the risfocus contributors
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

#ifndef RISFOCUS_EVAL_HPP
#define RISFOCUS_EVAL_HPP

#include "risfocus/scenario.hpp"

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace risfocus
{

enum class Method
{
    linear,
    opt
};

std::string to_string(Method m);
Method method_from_string(const std::string &name);

// Normalized gains |g/(g_uc*N)|^2 of one codeword over the intended ray
// pairs: rows index the BS->source rays (l2), columns the source->target
// rays (l1).
struct GainMap
{
    int source;
    int focus_target;
    Eigen::MatrixXd entries;
    Method method;
};

// Same map evaluated against the rays toward an unintended RIS.
struct LeakageReport
{
    int source;
    int focus_target;
    int leak_target;
    Eigen::MatrixXd entries;
    double max_leak;
    Method method;
};

struct AggregateRow
{
    Method method;
    double spread; // [rad]
    int nx;
    int nz;
    double mean_intended_gain; // over all ordered RIS pairs and ray pairs
    double mean_leakage;       // over all unintended (source, focus, leak) triples
    double mean_min_gain;      // per-codeword minimum, averaged
    int seed_count;
};

struct AggregateReport
{
    std::vector<AggregateRow> rows;
};

GainMap gain_map(const Scenario &sc, const PhaseVector &codeword, int source, int focus_target,
                 Method method);

LeakageReport leakage(const Scenario &sc, const PhaseVector &codeword, int source, int focus_target,
                      int leak_target, Method method);

// Scenario family of the aggregate sweep: every (nx, nz) size crossed with
// every spread, evaluated for every method over the given seeds.
struct AggregateConfig
{
    std::vector<std::array<int, 2>> sizes;
    std::vector<double> spreads; // [rad]
    double sdr_tol = 1e-6;
};

AggregateReport aggregate(const AggregateConfig &config, const std::vector<Method> &methods,
                          const std::vector<uint64_t> &seeds);

// CSV rows: source,focus,leak,l2,l1,value,method,seed; the leak column is
// "intended" for gain maps. `comments` go first, one '#' line each.
void write_map_csv(std::ostream &out, const GainMap &map, uint64_t seed,
                   const std::vector<std::string> &comments = {});
void write_map_csv(std::ostream &out, const LeakageReport &report, uint64_t seed,
                   const std::vector<std::string> &comments = {});

// Dense text grid with a one-line structural header (rows=l2, cols=l1).
void write_map_grid(std::ostream &out, const GainMap &map, uint64_t seed,
                    const std::vector<std::string> &comments = {});
void write_map_grid(std::ostream &out, const LeakageReport &report, uint64_t seed,
                    const std::vector<std::string> &comments = {});

void write_aggregate_csv(std::ostream &out, const AggregateReport &report,
                         const std::vector<uint64_t> &seeds,
                         const std::vector<std::string> &comments = {});

} // namespace risfocus

#endif
