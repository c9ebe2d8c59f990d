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

#include "risfocus/angles.hpp"

#include <cmath>
#include <stdexcept>

namespace risfocus
{

double wrap_azimuth(double rad)
{
    double a = std::fmod(rad, two_pi);
    if (a < 0.0)
        a += two_pi;
    if (a >= two_pi) // fmod can land exactly on 2*pi after the correction
        a -= two_pi;
    return a;
}

AngleDirection::AngleDirection(double elevation_rad, double azimuth_rad)
    : elevation(elevation_rad), azimuth(wrap_azimuth(azimuth_rad))
{
    if (!(elevation_rad >= 0.0 && elevation_rad <= pi))
        throw std::invalid_argument("AngleDirection: elevation must lie in [0, pi]");
}

DirectionCosines direction_cosines(const AngleDirection &a)
{
    double se = std::sin(a.elevation);
    return {se * std::cos(a.azimuth), se * std::sin(a.azimuth), std::cos(a.elevation)};
}

double combined_cosine(const AngleDirection &t, const AngleDirection &r, Axis axis)
{
    DirectionCosines ct = direction_cosines(t);
    DirectionCosines cr = direction_cosines(r);
    switch (axis)
    {
    case Axis::x:
        return ct.ax + cr.ax;
    case Axis::y:
        return ct.ay + cr.ay;
    default:
        return ct.az + cr.az;
    }
}

} // namespace risfocus
