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

#ifndef RISFOCUS_SCENARIO_HPP
#define RISFOCUS_SCENARIO_HPP

#include "risfocus/ris.hpp"
#include "risfocus/rng.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace risfocus
{

// Panel position and frame rotation about the global z axis. A panel's
// local azimuth of a global direction alpha is alpha - yaw.
struct Placement
{
    Eigen::Vector3d position; // [m]
    double yaw;               // [rad]
};

// One ray of a directed link: departure direction in the source panel's
// local frame, arrival direction in the destination panel's local frame.
struct LinkRay
{
    AngleDirection aod;
    AngleDirection aoa;
};

// All rays of one directed link; ray 0 is the LoS path.
struct LinkRays
{
    int endpoint_a; // source id (0 = BS, 1..I = RIS)
    int endpoint_b; // destination id
    std::vector<LinkRay> rays;
};

struct PanelNode
{
    Placement placement;
    ArrayGeometry geometry;
};

// A reconstructed multi-RIS deployment: placements, panel geometries and
// the per-link ray sets. Immutable after construction.
struct Scenario
{
    PanelNode bs;               // id 0
    std::vector<PanelNode> ris; // ids 1..I
    std::vector<LinkRays> links;
    Wave wave;
    uint64_t seed;
    double angle_spread; // NLoS sampling half-width [rad]

    int ris_count() const { return static_cast<int>(ris.size()); }
    const PanelNode &node(int id) const;
    const LinkRays &link(int from, int to) const;
};

struct Layout
{
    Placement bs;
    std::vector<Placement> ris;
};

// Places the BS at the origin and RIS i at distance d_bs[i] along its BS
// departure azimuth; the yaw makes the BS arrival azimuth in RIS i's local
// frame equal aoa_ris[i]. Angles in radians.
Layout derive_layout(const std::vector<double> &d_bs, const std::vector<double> &aod_bs,
                     const std::vector<double> &aoa_ris);

// LoS-only links for every ordered pair of RIS placements (ids 1..I in
// vector order). Departure/arrival azimuths follow from the displacement
// and the panel yaws; elevations follow from the height difference.
std::vector<LinkRays> los_inter_ris_rays(const std::vector<Placement> &placements);

// `count` directions with azimuths uniform in [los.azimuth - spread,
// los.azimuth + spread] and elevations fixed at pi/2.
std::vector<AngleDirection> sample_nlos(Rng &rng, const AngleDirection &los, double spread, int count);

// The four-RIS reference deployment: BS distances [50, 60, 40, 20] m, BS
// departure azimuths [30, 70, 110, 135] deg, RIS arrival azimuths
// [145, 90, 45, 10] deg, three rays per link, quarter-wavelength element
// spacing and unit cells, all elevations 90 deg. NLoS azimuths are drawn
// from per-link sub-streams keyed by (seed, link), so the result is a pure
// function of the arguments.
Scenario reference_scenario(uint64_t seed, std::pair<int, int> n_elements, double spread);

// Arrival directions at `ris_id` of the BS link rays (codebook inputs).
std::vector<AngleDirection> bs_arrival_angles(const Scenario &sc, int ris_id);

// Departure directions at `from` of the from->to link rays.
std::vector<AngleDirection> departure_angles(const Scenario &sc, int from, int to);

// (BS LoS AoA, target LoS AoD) design pair per target, for the linear
// codebook of `source`.
std::vector<std::pair<int, RayPair>> focus_designs(const Scenario &sc, int source);

// JSON serialization. Angles and positions are written in degrees/meters
// rounded to 12 significant digits; the loader validates link coverage and
// LoS consistency and converts back to radians.
std::string scenario_to_json(const Scenario &sc, const std::string &command_line = "");
Scenario scenario_from_json(const std::string &text);
void save_scenario(const Scenario &sc, const std::string &path, const std::string &command_line = "");
Scenario load_scenario(const std::string &path);

// Shortest signed angular distance a - b, in (-pi, pi].
double angle_difference(double a, double b);

// %.12g formatting used by every text emitter.
std::string fmt12(double value);

} // namespace risfocus

#endif
