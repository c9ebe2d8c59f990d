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

#include "risfocus/arrays.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace risfocus
{

ArrayGeometry::ArrayGeometry(int nx_, int nz_, double dx_, double dz_, double ucx, double ucz)
    : nx(nx_), nz(nz_), dx(dx_), dz(dz_), unit_cell_x(ucx), unit_cell_z(ucz)
{
    if (nx < 1 || nz < 1)
        throw std::invalid_argument("ArrayGeometry: element counts must be >= 1");
    if (dx <= 0.0 || dz <= 0.0)
        throw std::invalid_argument("ArrayGeometry: element spacings must be positive");
    if (unit_cell_x <= 0.0 || unit_cell_z <= 0.0)
        throw std::invalid_argument("ArrayGeometry: unit-cell dimensions must be positive");
}

Wave::Wave(double wavelength_m) : wavelength(wavelength_m)
{
    if (wavelength <= 0.0)
        throw std::invalid_argument("Wave: wavelength must be positive");
}

Eigen::VectorXcd phase_ramp_kron(int nx, int nz, double alpha_x, double alpha_z)
{
    Eigen::VectorXcd v(static_cast<Eigen::Index>(nx) * nz);
    for (int n1 = 0; n1 < nx; n1++)
    {
        std::complex<double> px = std::polar(1.0, alpha_x * n1);
        for (int n2 = 0; n2 < nz; n2++)
            v[static_cast<Eigen::Index>(n1) * nz + n2] = px * std::polar(1.0, alpha_z * n2);
    }
    return v;
}

Eigen::VectorXcd steering_vector(const ArrayGeometry &g, const AngleDirection &a, const Wave &w)
{
    DirectionCosines c = direction_cosines(a);
    double kappa = w.wavenumber();
    return phase_ramp_kron(g.nx, g.nz, kappa * g.dx * c.ax, kappa * g.dz * c.az);
}

} // namespace risfocus
