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

#include "risfocus/eval.hpp"

#include "risfocus/sdr.hpp"

#include <stdexcept>

namespace risfocus
{

std::string to_string(Method m) { return m == Method::linear ? "linear" : "opt"; }

Method method_from_string(const std::string &name)
{
    if (name == "linear")
        return Method::linear;
    if (name == "opt")
        return Method::opt;
    throw std::invalid_argument("unknown method '" + name + "' (expected 'linear' or 'opt')");
}

namespace
{

// Normalized gains of `codeword` for the BS->source arrivals crossed with
// the source->target departures.
Eigen::MatrixXd map_entries(const Scenario &sc, const PhaseVector &codeword, int source, int target)
{
    const PanelNode &node = sc.node(source);
    if (source < 1)
        throw std::invalid_argument("gain map: source must be a RIS id");
    if (codeword.geometry != node.geometry)
        throw std::invalid_argument("gain map: codeword geometry does not match the source RIS");

    std::vector<AngleDirection> incident = bs_arrival_angles(sc, source);
    std::vector<AngleDirection> reflected = departure_angles(sc, source, target);
    double g_uc = unit_cell_factor(node.geometry, sc.wave);

    Eigen::MatrixXd entries(incident.size(), reflected.size());
    for (std::size_t l2 = 0; l2 < incident.size(); l2++)
        for (std::size_t l1 = 0; l1 < reflected.size(); l1++)
        {
            std::complex<double> g = response(codeword, node.geometry, sc.wave,
                                              RayPair{incident[l2], reflected[l1]}, g_uc);
            entries(static_cast<Eigen::Index>(l2), static_cast<Eigen::Index>(l1)) =
                normalized_gain(g, g_uc, node.geometry.size());
        }
    return entries;
}

} // namespace

GainMap gain_map(const Scenario &sc, const PhaseVector &codeword, int source, int focus_target,
                 Method method)
{
    return {source, focus_target, map_entries(sc, codeword, source, focus_target), method};
}

LeakageReport leakage(const Scenario &sc, const PhaseVector &codeword, int source, int focus_target,
                      int leak_target, Method method)
{
    if (leak_target == focus_target)
        throw std::invalid_argument("leakage: leak target equals the focus target");
    sc.node(focus_target); // id validation
    Eigen::MatrixXd entries = map_entries(sc, codeword, source, leak_target);
    double max_leak = entries.maxCoeff();
    return {source, focus_target, leak_target, std::move(entries), max_leak, method};
}

AggregateReport aggregate(const AggregateConfig &config, const std::vector<Method> &methods,
                          const std::vector<uint64_t> &seeds)
{
    if (seeds.empty())
        throw std::invalid_argument("aggregate: need at least one seed");
    if (config.sizes.empty() || config.spreads.empty())
        throw std::invalid_argument("aggregate: empty scenario family");

    AggregateReport report;
    for (const auto &size : config.sizes)
        for (double spread : config.spreads)
            for (Method method : methods)
            {
                double intended_sum = 0.0, leak_sum = 0.0, min_sum = 0.0;
                long intended_count = 0, leak_count = 0, min_count = 0;

                for (uint64_t seed : seeds)
                {
                    Scenario sc = reference_scenario(seed, {size[0], size[1]}, spread);
                    for (int source = 1; source <= sc.ris_count(); source++)
                    {
                        std::vector<std::pair<int, PhaseVector>> book;
                        if (method == Method::linear)
                            book = linear_codebook(sc.node(source).geometry, sc.wave,
                                                   focus_designs(sc, source));
                        else
                            for (auto &[target, sol] : opt_codebook(sc, source, config.sdr_tol))
                                book.emplace_back(target, std::move(sol.codeword));

                        for (const auto &[target, codeword] : book)
                        {
                            GainMap gm = gain_map(sc, codeword, source, target, method);
                            intended_sum += gm.entries.sum();
                            intended_count += gm.entries.size();
                            min_sum += gm.entries.minCoeff();
                            min_count++;
                            for (int leak = 1; leak <= sc.ris_count(); leak++)
                            {
                                if (leak == source || leak == target)
                                    continue;
                                LeakageReport lr = leakage(sc, codeword, source, target, leak, method);
                                leak_sum += lr.entries.sum();
                                leak_count += lr.entries.size();
                            }
                        }
                    }
                }

                report.rows.push_back({method, spread, size[0], size[1],
                                       intended_sum / static_cast<double>(intended_count),
                                       leak_sum / static_cast<double>(leak_count),
                                       min_sum / static_cast<double>(min_count),
                                       static_cast<int>(seeds.size())});
            }
    return report;
}

namespace
{

void write_comments(std::ostream &out, const std::vector<std::string> &comments)
{
    for (const auto &c : comments)
        out << "# " << c << "\n";
}

void write_csv_body(std::ostream &out, int source, int focus, const std::string &leak,
                    const Eigen::MatrixXd &entries, Method method, uint64_t seed)
{
    out << "source,focus,leak,l2,l1,value,method,seed\n";
    for (Eigen::Index l2 = 0; l2 < entries.rows(); l2++)
        for (Eigen::Index l1 = 0; l1 < entries.cols(); l1++)
            out << source << ',' << focus << ',' << leak << ',' << l2 + 1 << ',' << l1 + 1 << ','
                << fmt12(entries(l2, l1)) << ',' << to_string(method) << ',' << seed << "\n";
}

void write_grid_body(std::ostream &out, int source, int focus, const std::string &leak,
                     const Eigen::MatrixXd &entries, Method method, uint64_t seed)
{
    out << "# rows=l2 cols=l1 source=" << source << " focus=" << focus << " leak=" << leak
        << " method=" << to_string(method) << " seed=" << seed << "\n";
    for (Eigen::Index l2 = 0; l2 < entries.rows(); l2++)
    {
        for (Eigen::Index l1 = 0; l1 < entries.cols(); l1++)
            out << (l1 ? " " : "") << fmt12(entries(l2, l1));
        out << "\n";
    }
}

} // namespace

void write_map_csv(std::ostream &out, const GainMap &map, uint64_t seed,
                   const std::vector<std::string> &comments)
{
    write_comments(out, comments);
    write_csv_body(out, map.source, map.focus_target, "intended", map.entries, map.method, seed);
}

void write_map_csv(std::ostream &out, const LeakageReport &report, uint64_t seed,
                   const std::vector<std::string> &comments)
{
    write_comments(out, comments);
    write_csv_body(out, report.source, report.focus_target, std::to_string(report.leak_target),
                   report.entries, report.method, seed);
}

void write_map_grid(std::ostream &out, const GainMap &map, uint64_t seed,
                    const std::vector<std::string> &comments)
{
    write_comments(out, comments);
    write_grid_body(out, map.source, map.focus_target, "intended", map.entries, map.method, seed);
}

void write_map_grid(std::ostream &out, const LeakageReport &report, uint64_t seed,
                    const std::vector<std::string> &comments)
{
    write_comments(out, comments);
    write_grid_body(out, report.source, report.focus_target, std::to_string(report.leak_target),
                    report.entries, report.method, seed);
}

void write_aggregate_csv(std::ostream &out, const AggregateReport &report,
                         const std::vector<uint64_t> &seeds,
                         const std::vector<std::string> &comments)
{
    write_comments(out, comments);
    out << "# seeds=";
    for (std::size_t i = 0; i < seeds.size(); i++)
        out << (i ? "," : "") << seeds[i];
    out << "\n";
    out << "method,delta_a_deg,nx,nz,seed_count,mean_intended_gain,mean_leakage,mean_min_gain\n";
    for (const auto &row : report.rows)
        out << to_string(row.method) << ',' << fmt12(rad2deg(row.spread)) << ',' << row.nx << ','
            << row.nz << ',' << row.seed_count << ',' << fmt12(row.mean_intended_gain) << ','
            << fmt12(row.mean_leakage) << ',' << fmt12(row.mean_min_gain) << "\n";
}

} // namespace risfocus
