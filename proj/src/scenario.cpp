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

#include "risfocus/scenario.hpp"

#include "risfocus/version.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace risfocus
{

namespace
{

using nlohmann::json;

constexpr double los_tolerance_rad = 1e-9;

// Sub-stream key of a directed link.
uint64_t link_key(int from, int to)
{
    return static_cast<uint64_t>(from) * 256u + static_cast<uint64_t>(to);
}

// LoS departure/arrival directions between two placements, in local frames.
LinkRay los_ray(const Placement &a, const Placement &b)
{
    Eigen::Vector3d d = b.position - a.position;
    double horizontal = std::hypot(d.x(), d.y());
    if (d.norm() < 1e-12)
        throw std::invalid_argument("los_ray: coincident placements");
    double alpha = std::atan2(d.y(), d.x());
    double elevation = std::atan2(horizontal, d.z()); // from +z axis
    return {AngleDirection(elevation, alpha - a.yaw),
            AngleDirection(pi - elevation, alpha + pi - b.yaw)};
}

} // namespace

double angle_difference(double a, double b)
{
    double d = std::fmod(a - b, two_pi);
    if (d <= -pi)
        d += two_pi;
    else if (d > pi)
        d -= two_pi;
    return d;
}

std::string fmt12(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

const PanelNode &Scenario::node(int id) const
{
    if (id == 0)
        return bs;
    if (id >= 1 && id <= ris_count())
        return ris[static_cast<std::size_t>(id) - 1];
    throw std::invalid_argument("Scenario: unknown panel id " + std::to_string(id));
}

const LinkRays &Scenario::link(int from, int to) const
{
    for (const auto &l : links)
        if (l.endpoint_a == from && l.endpoint_b == to)
            return l;
    throw std::invalid_argument("Scenario: no link " + std::to_string(from) + " -> " + std::to_string(to));
}

Layout derive_layout(const std::vector<double> &d_bs, const std::vector<double> &aod_bs,
                     const std::vector<double> &aoa_ris)
{
    if (d_bs.size() != aod_bs.size() || d_bs.size() != aoa_ris.size())
        throw std::invalid_argument("derive_layout: list lengths differ");

    Layout layout;
    layout.bs = {Eigen::Vector3d::Zero(), 0.0};
    layout.ris.reserve(d_bs.size());
    for (std::size_t i = 0; i < d_bs.size(); i++)
    {
        if (d_bs[i] <= 0.0)
            throw std::invalid_argument("derive_layout: distance must be positive");
        Eigen::Vector3d pos(d_bs[i] * std::cos(aod_bs[i]), d_bs[i] * std::sin(aod_bs[i]), 0.0);
        // The BS->RIS ray arrives from global azimuth aod+pi; the yaw maps
        // it onto the requested local arrival azimuth.
        double yaw = wrap_azimuth(aod_bs[i] + pi - aoa_ris[i]);
        layout.ris.push_back({pos, yaw});
    }
    return layout;
}

std::vector<LinkRays> los_inter_ris_rays(const std::vector<Placement> &placements)
{
    if (placements.size() < 2)
        throw std::invalid_argument("los_inter_ris_rays: need at least two placements");

    std::vector<LinkRays> links;
    int count = static_cast<int>(placements.size());
    for (int i = 0; i < count; i++)
        for (int j = 0; j < count; j++)
        {
            if (i == j)
                continue;
            LinkRays l{i + 1, j + 1, {los_ray(placements[i], placements[j])}};
            links.push_back(std::move(l));
        }
    return links;
}

std::vector<AngleDirection> sample_nlos(Rng &rng, const AngleDirection &los, double spread, int count)
{
    if (count < 0)
        throw std::invalid_argument("sample_nlos: negative count");
    if (spread < 0.0)
        throw std::invalid_argument("sample_nlos: negative spread");

    std::vector<AngleDirection> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; i++)
        out.emplace_back(0.5 * pi, rng.uniform(los.azimuth - spread, los.azimuth + spread));
    return out;
}

namespace
{

// Appends spread samples behind the LoS ray of a link, drawing the
// departure list before the arrival list from the link's sub-stream.
void append_nlos(LinkRays &link, uint64_t seed, double spread, int total_rays)
{
    Rng rng(substream_seed(seed, link_key(link.endpoint_a, link.endpoint_b)));
    std::vector<AngleDirection> aods = sample_nlos(rng, link.rays[0].aod, spread, total_rays - 1);
    std::vector<AngleDirection> aoas = sample_nlos(rng, link.rays[0].aoa, spread, total_rays - 1);
    for (int r = 0; r + 1 < total_rays; r++)
        link.rays.push_back({aods[static_cast<std::size_t>(r)], aoas[static_cast<std::size_t>(r)]});
}

} // namespace

Scenario reference_scenario(uint64_t seed, std::pair<int, int> n_elements, double spread)
{
    const std::vector<double> d_bs = {50.0, 60.0, 40.0, 20.0};
    const std::vector<double> aod_bs = {deg2rad(30), deg2rad(70), deg2rad(110), deg2rad(135)};
    const std::vector<double> aoa_ris = {deg2rad(145), deg2rad(90), deg2rad(45), deg2rad(10)};
    constexpr int rays_per_link = 3;
    constexpr double lambda = 0.01; // outputs are wavelength-invariant; see README

    Layout layout = derive_layout(d_bs, aod_bs, aoa_ris);

    Wave wave(lambda);
    double quarter = 0.25 * lambda;
    ArrayGeometry bs_geom(10, 5, quarter, quarter, quarter, quarter);
    ArrayGeometry ris_geom(n_elements.first, n_elements.second, quarter, quarter, quarter, quarter);

    std::vector<PanelNode> ris;
    for (const auto &p : layout.ris)
        ris.push_back({p, ris_geom});

    std::vector<LinkRays> links;
    for (std::size_t i = 0; i < layout.ris.size(); i++)
    {
        LinkRays l{0, static_cast<int>(i) + 1, {los_ray(layout.bs, layout.ris[i])}};
        append_nlos(l, seed, spread, rays_per_link);
        links.push_back(std::move(l));
    }
    for (auto &l : los_inter_ris_rays(layout.ris))
    {
        append_nlos(l, seed, spread, rays_per_link);
        links.push_back(std::move(l));
    }

    return Scenario{{layout.bs, bs_geom}, std::move(ris), std::move(links), wave, seed, spread};
}

std::vector<AngleDirection> bs_arrival_angles(const Scenario &sc, int ris_id)
{
    std::vector<AngleDirection> out;
    for (const auto &ray : sc.link(0, ris_id).rays)
        out.push_back(ray.aoa);
    return out;
}

std::vector<AngleDirection> departure_angles(const Scenario &sc, int from, int to)
{
    std::vector<AngleDirection> out;
    for (const auto &ray : sc.link(from, to).rays)
        out.push_back(ray.aod);
    return out;
}

std::vector<std::pair<int, RayPair>> focus_designs(const Scenario &sc, int source)
{
    std::vector<std::pair<int, RayPair>> designs;
    AngleDirection bs_los = sc.link(0, source).rays[0].aoa;
    for (int target = 1; target <= sc.ris_count(); target++)
    {
        if (target == source)
            continue;
        designs.emplace_back(target, RayPair{bs_los, sc.link(source, target).rays[0].aod});
    }
    return designs;
}

// ---------------------------------------------------------------------------
// JSON serialization

namespace
{

double round12(double value) { return std::strtod(fmt12(value).c_str(), nullptr); }

json angle_to_json(const AngleDirection &a)
{
    return json::array({round12(rad2deg(a.elevation)), round12(rad2deg(a.azimuth))});
}

AngleDirection angle_from_json(const json &j, const std::string &field)
{
    if (!j.is_array() || j.size() != 2)
        throw std::runtime_error("scenario: field '" + field + "' must be [elevation_deg, azimuth_deg]");
    return AngleDirection(deg2rad(j[0].get<double>()), deg2rad(j[1].get<double>()));
}

json node_to_json(const PanelNode &n, double lambda)
{
    return json{{"position_m", {round12(n.placement.position.x()), round12(n.placement.position.y()),
                                round12(n.placement.position.z())}},
                {"yaw_deg", round12(rad2deg(n.placement.yaw))},
                {"nx", n.geometry.nx},
                {"nz", n.geometry.nz},
                {"dx_over_lambda", round12(n.geometry.dx / lambda)},
                {"dz_over_lambda", round12(n.geometry.dz / lambda)},
                {"ucx_over_lambda", round12(n.geometry.unit_cell_x / lambda)},
                {"ucz_over_lambda", round12(n.geometry.unit_cell_z / lambda)}};
}

PanelNode node_from_json(const json &j, double lambda, const std::string &where)
{
    try
    {
        auto pos = j.at("position_m");
        if (!pos.is_array() || pos.size() != 3)
            throw std::runtime_error("scenario: field '" + where + ".position_m' must have 3 entries");
        Placement p{Eigen::Vector3d(pos[0].get<double>(), pos[1].get<double>(), pos[2].get<double>()),
                    deg2rad(j.at("yaw_deg").get<double>())};
        ArrayGeometry g(j.at("nx").get<int>(), j.at("nz").get<int>(),
                        j.at("dx_over_lambda").get<double>() * lambda,
                        j.at("dz_over_lambda").get<double>() * lambda,
                        j.at("ucx_over_lambda").get<double>() * lambda,
                        j.at("ucz_over_lambda").get<double>() * lambda);
        return {p, g};
    }
    catch (const json::exception &e)
    {
        throw std::runtime_error("scenario: invalid panel object '" + where + "': " + e.what());
    }
}

void validate_links(const Scenario &sc)
{
    int count = sc.ris_count();
    for (int i = 1; i <= count; i++)
        sc.link(0, i); // throws when absent
    for (int i = 1; i <= count; i++)
        for (int j = 1; j <= count; j++)
            if (i != j)
                sc.link(i, j);

    for (const auto &l : sc.links)
    {
        if (l.rays.empty())
            throw std::runtime_error("scenario: link " + std::to_string(l.endpoint_a) + "->" +
                                     std::to_string(l.endpoint_b) + " has no rays");
        LinkRay expected = los_ray(sc.node(l.endpoint_a).placement, sc.node(l.endpoint_b).placement);
        const LinkRay &stored = l.rays[0];
        double err = std::max(
            {std::abs(angle_difference(stored.aod.azimuth, expected.aod.azimuth)),
             std::abs(angle_difference(stored.aoa.azimuth, expected.aoa.azimuth)),
             std::abs(stored.aod.elevation - expected.aod.elevation),
             std::abs(stored.aoa.elevation - expected.aoa.elevation)});
        if (err > los_tolerance_rad)
            throw std::runtime_error("scenario: ray 0 of link " + std::to_string(l.endpoint_a) + "->" +
                                     std::to_string(l.endpoint_b) +
                                     " is inconsistent with the placement geometry (error " +
                                     fmt12(err) + " rad)");
    }
}

} // namespace

std::string scenario_to_json(const Scenario &sc, const std::string &command_line)
{
    double lambda = sc.wave.wavelength;
    json j;
    j["wave"] = {{"wavelength_m", round12(lambda)}};
    j["bs"] = node_to_json(sc.bs, lambda);
    j["ris"] = json::array();
    for (const auto &r : sc.ris)
        j["ris"].push_back(node_to_json(r, lambda));
    j["links"] = json::array();
    for (const auto &l : sc.links)
    {
        json rays = json::array();
        for (const auto &ray : l.rays)
            rays.push_back({{"aod_deg", angle_to_json(ray.aod)}, {"aoa_deg", angle_to_json(ray.aoa)}});
        j["links"].push_back({{"from", l.endpoint_a}, {"to", l.endpoint_b}, {"rays", rays}});
    }
    j["seed"] = sc.seed;
    j["delta_a_deg"] = round12(rad2deg(sc.angle_spread));
    if (!command_line.empty())
        j["provenance"] = {{"tool", std::string("risfocus ") + RISFOCUS_VERSION}, {"command", command_line}};
    return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string &text)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::exception &e)
    {
        throw std::runtime_error(std::string("scenario: not valid JSON: ") + e.what());
    }

    try
    {
        double lambda = j.at("wave").at("wavelength_m").get<double>();
        Wave wave(lambda);

        PanelNode bs = node_from_json(j.at("bs"), lambda, "bs");
        std::vector<PanelNode> ris;
        const auto &jris = j.at("ris");
        if (!jris.is_array() || jris.empty())
            throw std::runtime_error("scenario: field 'ris' must be a non-empty array");
        for (std::size_t i = 0; i < jris.size(); i++)
            ris.push_back(node_from_json(jris[i], lambda, "ris[" + std::to_string(i) + "]"));

        std::vector<LinkRays> links;
        for (const auto &jl : j.at("links"))
        {
            LinkRays l{jl.at("from").get<int>(), jl.at("to").get<int>(), {}};
            for (const auto &jr : jl.at("rays"))
                l.rays.push_back({angle_from_json(jr.at("aod_deg"), "links.rays.aod_deg"),
                                  angle_from_json(jr.at("aoa_deg"), "links.rays.aoa_deg")});
            links.push_back(std::move(l));
        }

        Scenario sc{std::move(bs),
                    std::move(ris),
                    std::move(links),
                    wave,
                    j.at("seed").get<uint64_t>(),
                    deg2rad(j.at("delta_a_deg").get<double>())};
        validate_links(sc);
        return sc;
    }
    catch (const json::exception &e)
    {
        throw std::runtime_error(std::string("scenario: schema violation: ") + e.what());
    }
}

void save_scenario(const Scenario &sc, const std::string &path, const std::string &command_line)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << scenario_to_json(sc, command_line);
}

Scenario load_scenario(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json(buf.str());
}

} // namespace risfocus
