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

#ifndef RISFOCUS_ARRAYS_HPP
#define RISFOCUS_ARRAYS_HPP

#include "risfocus/angles.hpp"

#include <Eigen/Dense>

namespace risfocus
{

// Element counts, spacings and unit-cell dimensions of one rectangular
// planar panel. Elements lie on a regular x-z grid.
struct ArrayGeometry
{
    int nx;             // element count along x
    int nz;             // element count along z
    double dx;          // element spacing along x [m]
    double dz;          // element spacing along z [m]
    double unit_cell_x; // unit-cell width [m]
    double unit_cell_z; // unit-cell height [m]

    ArrayGeometry(int nx, int nz, double dx, double dz, double unit_cell_x, double unit_cell_z);

    int size() const { return nx * nz; }

    bool operator==(const ArrayGeometry &) const = default;
};

// Carrier wave; the wavenumber kappa = 2*pi/lambda is derived so the
// kappa*lambda = 2*pi invariant holds by construction.
struct Wave
{
    double wavelength; // lambda_c [m]

    explicit Wave(double wavelength_m);

    double wavenumber() const { return two_pi / wavelength; }
};

// Vector with entries exp(j*(alpha_x*n1 + alpha_z*n2)), n1 in [0,nx),
// n2 in [0,nz), ordered as the Kronecker product of the x factor (outer)
// with the z factor (inner): index = n1*nz + n2.
Eigen::VectorXcd phase_ramp_kron(int nx, int nz, double alpha_x, double alpha_z);

// Array steering vector for direction a: element (n1, n2) equals
// exp(j*kappa*dx*Ax*n1) * exp(j*kappa*dz*Az*n2) with the ordering of
// phase_ramp_kron. The first element is always 1.
Eigen::VectorXcd steering_vector(const ArrayGeometry &g, const AngleDirection &a, const Wave &w);

} // namespace risfocus

#endif
