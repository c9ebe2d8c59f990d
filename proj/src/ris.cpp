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

#include "risfocus/ris.hpp"

#include "risfocus/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace risfocus
{

PhaseVector::PhaseVector(Eigen::VectorXcd c, const ArrayGeometry &g) : coefficients(std::move(c)), geometry(g)
{
    if (coefficients.size() != geometry.size())
        throw std::invalid_argument("PhaseVector: coefficient count does not match geometry");
    for (Eigen::Index i = 0; i < coefficients.size(); i++)
        if (std::abs(std::abs(coefficients[i]) - 1.0) > 1e-9)
            throw std::invalid_argument("PhaseVector: coefficients must have unit modulus");
}

double unit_cell_factor(const ArrayGeometry &g, const Wave &w)
{
    return 4.0 * pi * g.unit_cell_x * g.unit_cell_z / (w.wavelength * w.wavelength);
}

Eigen::VectorXcd response_vector(const ArrayGeometry &g, const Wave &w, const RayPair &ray)
{
    double kappa = w.wavenumber();
    double ax = combined_cosine(ray.incident, ray.reflected, Axis::x);
    double az = combined_cosine(ray.incident, ray.reflected, Axis::z);
    return phase_ramp_kron(g.nx, g.nz, kappa * g.dx * ax, kappa * g.dz * az);
}

std::complex<double> response(const PhaseVector &p, const ArrayGeometry &g, const Wave &w,
                              const RayPair &ray, double g_uc)
{
    if (p.geometry.nx != g.nx || p.geometry.nz != g.nz)
        throw std::invalid_argument("response: phase vector does not match array geometry");
    Eigen::VectorXcd v = response_vector(g, w, ray);
    return g_uc * kernels::dotu(p.coefficients.data(), v.data(), static_cast<std::size_t>(v.size()));
}

double normalized_gain(std::complex<double> g, double g_uc, int n_elements)
{
    return std::norm(g / (g_uc * static_cast<double>(n_elements)));
}

PhaseVector linear_codeword(const ArrayGeometry &g, const Wave &w, const RayPair &design)
{
    double kappa = w.wavenumber();
    double ax = combined_cosine(design.incident, design.reflected, Axis::x);
    double az = combined_cosine(design.incident, design.reflected, Axis::z);
    return {phase_ramp_kron(g.nx, g.nz, -kappa * g.dx * ax, -kappa * g.dz * az), g};
}

namespace
{

// sum_{k=0}^{n-1} exp(j*alpha*k). Near a full period the 0/0 form is
// replaced by its limit, the term count n.
std::complex<double> geometric_phasor_sum(double alpha, int n)
{
    double denom = std::sin(0.5 * alpha);
    if (std::abs(denom) < 1e-12)
        return {static_cast<double>(n), 0.0};
    return std::polar(std::sin(0.5 * alpha * n) / denom, 0.5 * alpha * (n - 1));
}

} // namespace

std::complex<double> linear_response(const ArrayGeometry &g, const Wave &w, const RayPair &ray,
                                     const RayPair &design, double g_uc)
{
    double kappa = w.wavenumber();
    double delta_x = combined_cosine(ray.incident, ray.reflected, Axis::x) -
                     combined_cosine(design.incident, design.reflected, Axis::x);
    double delta_z = combined_cosine(ray.incident, ray.reflected, Axis::z) -
                     combined_cosine(design.incident, design.reflected, Axis::z);
    return g_uc * geometric_phasor_sum(kappa * g.dx * delta_x, g.nx) *
           geometric_phasor_sum(kappa * g.dz * delta_z, g.nz);
}

std::vector<std::pair<int, PhaseVector>>
linear_codebook(const ArrayGeometry &g, const Wave &w,
                const std::vector<std::pair<int, RayPair>> &designs)
{
    std::vector<std::pair<int, PhaseVector>> book;
    book.reserve(designs.size());
    for (const auto &[target, design] : designs)
        book.emplace_back(target, linear_codeword(g, w, design));
    std::sort(book.begin(), book.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    for (std::size_t i = 1; i < book.size(); i++)
        if (book[i].first == book[i - 1].first)
            throw std::invalid_argument("linear_codebook: duplicate target identifier");
    return book;
}

} // namespace risfocus
