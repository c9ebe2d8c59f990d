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

#ifndef RISFOCUS_RIS_HPP
#define RISFOCUS_RIS_HPP

#include "risfocus/arrays.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace risfocus
{

// One complete phase-shift configuration of a panel: a unit-modulus
// complex reflection-coefficient vector tied to the geometry it was
// built for.
struct PhaseVector
{
    Eigen::VectorXcd coefficients;
    ArrayGeometry geometry;

    PhaseVector(Eigen::VectorXcd coefficients, const ArrayGeometry &geometry);
};

// Incident (AoA) and reflected (AoD) direction pair at a panel.
struct RayPair
{
    AngleDirection incident;
    AngleDirection reflected;
};

// Dimensionless per-element radiation scale 4*pi*Lx*Lz/lambda^2.
double unit_cell_factor(const ArrayGeometry &g, const Wave &w);

// Vector of per-element phasors for a ray pair: Kronecker product of the
// x factor (exponents kappa*dx*Ax(t,r)*n1, outer) with the z factor
// (exponents kappa*dz*Az(t,r)*n2, inner).
Eigen::VectorXcd response_vector(const ArrayGeometry &g, const Wave &w, const RayPair &ray);

// Complex gain of the panel for a ray pair under phase configuration p:
// g_uc * sum_n response_vector(ray)[n] * p[n]. Throws std::invalid_argument
// if p was built for a different geometry.
std::complex<double> response(const PhaseVector &p, const ArrayGeometry &g, const Wave &w,
                              const RayPair &ray, double g_uc);

// Response power relative to its theoretical maximum: |g/(g_uc*N)|^2.
double normalized_gain(std::complex<double> g, double g_uc, int n_elements);

// Phase configuration that focuses the design ray pair: entry (n1, n2) is
// exp(-j*kappa*dx*Ax*(t*,r*)*n1) * exp(-j*kappa*dz*Az*(t*,r*)*n2). The
// response magnitude at the design pair equals g_uc*N.
PhaseVector linear_codeword(const ArrayGeometry &g, const Wave &w, const RayPair &design);

// Closed-form response of linear_codeword(design) at an arbitrary ray pair,
// evaluated as the product of two geometric-series factors.
std::complex<double> linear_response(const ArrayGeometry &g, const Wave &w, const RayPair &ray,
                                     const RayPair &design, double g_uc);

// Codewords of one panel, one per target, built from the per-target
// (BS LoS AoA, target LoS AoD) design pairs. Returned sorted by target id.
// Throws std::invalid_argument on duplicate target ids.
std::vector<std::pair<int, PhaseVector>>
linear_codebook(const ArrayGeometry &g, const Wave &w,
                const std::vector<std::pair<int, RayPair>> &designs);

} // namespace risfocus

#endif
