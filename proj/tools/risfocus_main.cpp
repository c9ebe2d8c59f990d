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

#include "risfocus/codebook_io.hpp"
#include "risfocus/eval.hpp"
#include "risfocus/sdr.hpp"
#include "risfocus/version.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace
{

using namespace risfocus;

std::string join_command_line(int argc, char **argv)
{
    std::string cmd = "risfocus";
    for (int i = 1; i < argc; i++)
        cmd += std::string(" ") + argv[i];
    return cmd;
}

// Seed lists accept comma-separated entries and inclusive "a..b" ranges.
std::vector<uint64_t> parse_seed_list(const std::string &text)
{
    std::vector<uint64_t> seeds;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
    {
        auto dots = token.find("..");
        if (dots == std::string::npos)
        {
            seeds.push_back(std::stoull(token));
            continue;
        }
        uint64_t lo = std::stoull(token.substr(0, dots));
        uint64_t hi = std::stoull(token.substr(dots + 2));
        if (hi < lo)
            throw std::runtime_error("invalid seed range '" + token + "'");
        for (uint64_t s = lo; s <= hi; s++)
            seeds.push_back(s);
    }
    if (seeds.empty())
        throw std::runtime_error("empty seed list");
    return seeds;
}

std::vector<Method> parse_methods(const std::string &text)
{
    if (text == "both")
        return {Method::linear, Method::opt};
    return {method_from_string(text)};
}

void write_text_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

std::vector<std::string> provenance_comments(const std::string &command_line, uint64_t seed)
{
    return {std::string("risfocus ") + RISFOCUS_VERSION, "command: " + command_line,
            "seed: " + std::to_string(seed)};
}

std::vector<std::pair<int, PhaseVector>> build_codewords(const Scenario &sc, int source,
                                                         Method method, double sdr_tol)
{
    if (method == Method::linear)
        return linear_codebook(sc.node(source).geometry, sc.wave, focus_designs(sc, source));
    std::vector<std::pair<int, PhaseVector>> out;
    for (auto &[target, sol] : opt_codebook(sc, source, sdr_tol))
        out.emplace_back(target, std::move(sol.codeword));
    return out;
}

struct EvaluateArgs
{
    std::string scenario_path;
    std::string codebook_path;
    int source = 0;
    int focus = 0;
    int leak = 0;
    std::string output_dir = ".";
};

void run_evaluate(const EvaluateArgs &args, bool leakage_mode, const std::string &command_line)
{
    Scenario sc = load_scenario(args.scenario_path);
    CodebookFile cb = load_codebook(args.codebook_path);
    if (cb.source != args.source)
        throw std::runtime_error("codebook was built for source " + std::to_string(cb.source) +
                                 ", not " + std::to_string(args.source));
    if (cb.scenario_seed != sc.seed)
        throw std::runtime_error("codebook was built from scenario seed " +
                                 std::to_string(cb.scenario_seed) + ", but the scenario file has seed " +
                                 std::to_string(sc.seed));
    PhaseVector cw = cb.codeword_for(args.focus, sc.node(args.source).geometry);

    std::filesystem::create_directories(args.output_dir);
    auto comments = provenance_comments(command_line, sc.seed);
    std::string method = to_string(cb.method);

    std::ostringstream csv, grid;
    std::string stem;
    if (leakage_mode)
    {
        LeakageReport report = leakage(sc, cw, args.source, args.focus, args.leak, cb.method);
        write_map_csv(csv, report, sc.seed, comments);
        write_map_grid(grid, report, sc.seed, comments);
        stem = "leakage_src" + std::to_string(args.source) + "_focus" + std::to_string(args.focus) +
               "_leak" + std::to_string(args.leak) + "_" + method;
        std::cout << "max leakage: " << fmt12(report.max_leak) << "\n";
    }
    else
    {
        GainMap map = gain_map(sc, cw, args.source, args.focus, cb.method);
        write_map_csv(csv, map, sc.seed, comments);
        write_map_grid(grid, map, sc.seed, comments);
        stem = "gains_src" + std::to_string(args.source) + "_focus" + std::to_string(args.focus) +
               "_" + method;
    }

    std::string csv_path = args.output_dir + "/" + stem + ".csv";
    std::string grid_path = args.output_dir + "/" + stem + ".grid";
    write_text_file(csv_path, csv.str());
    write_text_file(grid_path, grid.str());
    std::cout << "wrote " << csv_path << "\n" << "wrote " << grid_path << "\n";
}

} // namespace

int main(int argc, char **argv)
{
    std::string command_line = join_command_line(argc, argv);

    CLI::App app{"inter-RIS beam focusing codebook construction and evaluation"};
    app.require_subcommand(1);

    // --- scenario gen -------------------------------------------------
    auto *scenario_cmd = app.add_subcommand("scenario", "scenario file operations");
    scenario_cmd->require_subcommand(1);
    auto *gen = scenario_cmd->add_subcommand("gen", "generate a multi-RIS scenario");
    bool use_reference = false;
    uint64_t gen_seed = 1;
    int gen_nx = 7, gen_nz = 7;
    double gen_delta = 10.0;
    std::string gen_out = "scenario.json";
    gen->add_flag("--paper", use_reference, "use the built-in four-RIS reference deployment")->required();
    gen->add_option("--seed", gen_seed, "NLoS sampling seed")->required();
    gen->add_option("--nx", gen_nx, "RIS elements along x");
    gen->add_option("--nz", gen_nz, "RIS elements along z");
    gen->add_option("--delta-a-deg", gen_delta, "angle spread half-width [deg]");
    gen->add_option("--out", gen_out, "output path");
    gen->callback(
        [&]
        {
            Scenario sc = reference_scenario(gen_seed, {gen_nx, gen_nz}, deg2rad(gen_delta));
            save_scenario(sc, gen_out, command_line);
            std::cout << "wrote " << gen_out << " (" << sc.links.size() << " links)\n";
        });

    // --- codebook build -----------------------------------------------
    auto *codebook_cmd = app.add_subcommand("codebook", "codebook construction");
    codebook_cmd->require_subcommand(1);
    auto *build = codebook_cmd->add_subcommand("build", "build focusing codewords for one RIS");
    std::string build_scenario, build_method = "both", build_outdir = ".";
    int build_source = 0;
    double build_tol = 1e-6;
    build->add_option("--scenario", build_scenario, "scenario file")->required();
    build->add_option("--source", build_source, "source RIS id")->required();
    build->add_option("--method", build_method, "linear | opt | both")->default_val("both");
    build->add_option("--sdr-tol", build_tol, "relaxation tolerance")->check(CLI::PositiveNumber);
    build->add_option("--output-dir", build_outdir, "output directory");
    build->callback(
        [&]
        {
            Scenario sc = load_scenario(build_scenario);
            std::filesystem::create_directories(build_outdir);
            for (Method method : parse_methods(build_method))
            {
                auto codewords = build_codewords(sc, build_source, method, build_tol);
                CodebookFile cb = make_codebook_file(build_source, method,
                                                     sc.node(build_source).geometry, sc.seed, codewords);
                std::string path = build_outdir + "/codebook_src" + std::to_string(build_source) +
                                   "_" + to_string(method) + ".json";
                save_codebook(cb, path, command_line);
                std::cout << "wrote " << path << " (" << cb.entries.size() << " codewords)\n";
            }
        });

    // --- evaluate gains | leakage ---------------------------------------
    auto *evaluate_cmd = app.add_subcommand("evaluate", "gain and leakage maps");
    evaluate_cmd->require_subcommand(1);
    EvaluateArgs eval_args;

    auto *gains = evaluate_cmd->add_subcommand("gains", "normalized gains toward the focus target");
    gains->add_option("--scenario", eval_args.scenario_path)->required();
    gains->add_option("--codebook", eval_args.codebook_path)->required();
    gains->add_option("--source", eval_args.source)->required();
    gains->add_option("--focus", eval_args.focus)->required();
    gains->add_option("--output-dir", eval_args.output_dir);
    gains->callback([&] { run_evaluate(eval_args, false, command_line); });

    auto *leak = evaluate_cmd->add_subcommand("leakage", "normalized gains toward an unintended RIS");
    leak->add_option("--scenario", eval_args.scenario_path)->required();
    leak->add_option("--codebook", eval_args.codebook_path)->required();
    leak->add_option("--source", eval_args.source)->required();
    leak->add_option("--focus", eval_args.focus)->required();
    leak->add_option("--leak", eval_args.leak)->required();
    leak->add_option("--output-dir", eval_args.output_dir);
    leak->callback([&] { run_evaluate(eval_args, true, command_line); });

    // --- aggregate ------------------------------------------------------
    auto *agg = app.add_subcommand("aggregate", "scenario-family averages over seeds");
    std::string agg_seeds, agg_method = "both", agg_outdir = ".";
    std::vector<int> agg_nx = {7}, agg_nz = {7};
    std::vector<double> agg_delta = {10.0};
    double agg_tol = 1e-6;
    agg->add_option("--seeds", agg_seeds, "comma list and/or a..b ranges")->required();
    agg->add_option("--nx", agg_nx, "element counts along x (zipped with --nz)")->delimiter(',');
    agg->add_option("--nz", agg_nz, "element counts along z")->delimiter(',');
    agg->add_option("--delta-a-deg", agg_delta, "angle spreads [deg]")->delimiter(',');
    agg->add_option("--method", agg_method, "linear | opt | both")->default_val("both");
    agg->add_option("--sdr-tol", agg_tol)->check(CLI::PositiveNumber);
    agg->add_option("--output-dir", agg_outdir);
    agg->callback(
        [&]
        {
            if (agg_nx.size() != agg_nz.size())
                throw std::runtime_error("--nx and --nz need the same number of entries");
            AggregateConfig config;
            for (std::size_t i = 0; i < agg_nx.size(); i++)
                config.sizes.push_back({agg_nx[i], agg_nz[i]});
            for (double d : agg_delta)
                config.spreads.push_back(deg2rad(d));
            config.sdr_tol = agg_tol;

            std::vector<uint64_t> seeds = parse_seed_list(agg_seeds);
            AggregateReport report = aggregate(config, parse_methods(agg_method), seeds);

            std::filesystem::create_directories(agg_outdir);
            std::ostringstream csv;
            write_aggregate_csv(csv, report, seeds,
                                {std::string("risfocus ") + RISFOCUS_VERSION,
                                 "command: " + command_line});
            std::string path = agg_outdir + "/aggregate.csv";
            write_text_file(path, csv.str());
            std::cout << "wrote " << path << " (" << report.rows.size() << " rows)\n";
        });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e);
    }
    catch (const std::exception &e)
    {
        std::cerr << "risfocus: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
