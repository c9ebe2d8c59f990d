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

#ifndef RISFOCUS_ANGLES_HPP
#define RISFOCUS_ANGLES_HPP

#include <numbers>

namespace risfocus
{

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double deg2rad(double deg) { return deg * pi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / pi; }

// Wraps an angle into [0, 2*pi).
double wrap_azimuth(double rad);

// Propagation direction in a panel-local frame. Elevation is measured from
// the local +z axis (boresight plane at pi/2), azimuth from the local +x axis.
// All angles in radians; azimuth is normalized to [0, 2*pi) on construction.
struct AngleDirection
{
    double elevation; // [0, pi]
    double azimuth;   // [0, 2*pi)

    AngleDirection(double elevation_rad, double azimuth_rad);
};

// Projection of a direction onto the array axes:
// (sin(el)*cos(az), sin(el)*sin(az), cos(el)). Unit norm by construction.
struct DirectionCosines
{
    double ax;
    double ay;
    double az;
};

enum class Axis
{
    x,
    y,
    z
};

DirectionCosines direction_cosines(const AngleDirection &a);

// Sum of the chosen direction cosine of the transmit and receive directions.
// Range [-2, 2].
double combined_cosine(const AngleDirection &t, const AngleDirection &r, Axis axis);

} // namespace risfocus

#endif
