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

#include "risfocus/version.hpp"

#include <json.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace risfocus
{

using nlohmann::json;

PhaseVector CodebookFile::codeword_for(int target, const ArrayGeometry &g) const
{
    if (g.nx != nx || g.nz != nz)
        throw std::runtime_error("codebook: stored element counts " + std::to_string(nx) + "x" +
                                 std::to_string(nz) + " do not match the requested geometry");
    for (const auto &e : entries)
    {
        if (e.target != target)
            continue;
        Eigen::VectorXcd coeff(e.phases_rad.size());
        for (Eigen::Index i = 0; i < coeff.size(); i++)
            coeff[i] = std::polar(1.0, e.phases_rad[i]);
        return {coeff, g};
    }
    throw std::runtime_error("codebook: no codeword for target " + std::to_string(target));
}

CodebookFile make_codebook_file(int source, Method method, const ArrayGeometry &g,
                                uint64_t scenario_seed,
                                const std::vector<std::pair<int, PhaseVector>> &codewords)
{
    CodebookFile cb{source, method, g.nx, g.nz, scenario_seed, {}};
    for (const auto &[target, cw] : codewords)
    {
        Eigen::VectorXd phases(cw.coefficients.size());
        for (Eigen::Index i = 0; i < phases.size(); i++)
            phases[i] = std::arg(cw.coefficients[i]);
        cb.entries.push_back({target, std::move(phases)});
    }
    return cb;
}

std::string codebook_to_json(const CodebookFile &cb, const std::string &command_line)
{
    json j;
    j["source"] = cb.source;
    j["method"] = to_string(cb.method);
    j["nx"] = cb.nx;
    j["nz"] = cb.nz;
    j["scenario_seed"] = cb.scenario_seed;
    j["codewords"] = json::array();
    for (const auto &e : cb.entries)
    {
        json phases = json::array();
        for (Eigen::Index i = 0; i < e.phases_rad.size(); i++)
            phases.push_back(e.phases_rad[i]);
        j["codewords"].push_back({{"target", e.target}, {"phases_rad", phases}});
    }
    if (!command_line.empty())
        j["provenance"] = {{"tool", std::string("risfocus ") + RISFOCUS_VERSION}, {"command", command_line}};
    return j.dump(2) + "\n";
}

CodebookFile codebook_from_json(const std::string &text)
{
    try
    {
        json j = json::parse(text);
        CodebookFile cb{j.at("source").get<int>(), method_from_string(j.at("method").get<std::string>()),
                        j.at("nx").get<int>(),     j.at("nz").get<int>(),
                        j.at("scenario_seed").get<uint64_t>(), {}};
        for (const auto &je : j.at("codewords"))
        {
            const auto &jp = je.at("phases_rad");
            Eigen::VectorXd phases(jp.size());
            for (std::size_t i = 0; i < jp.size(); i++)
                phases[static_cast<Eigen::Index>(i)] = jp[i].get<double>();
            if (phases.size() != static_cast<Eigen::Index>(cb.nx) * cb.nz)
                throw std::runtime_error("codebook: field 'phases_rad' has wrong length");
            cb.entries.push_back({je.at("target").get<int>(), std::move(phases)});
        }
        return cb;
    }
    catch (const json::exception &e)
    {
        throw std::runtime_error(std::string("codebook: schema violation: ") + e.what());
    }
}

void save_codebook(const CodebookFile &cb, const std::string &path, const std::string &command_line)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << codebook_to_json(cb, command_line);
}

CodebookFile load_codebook(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return codebook_from_json(buf.str());
}

} // namespace risfocus
