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

#ifndef RISFOCUS_MAXMIN_SDP_HPP
#define RISFOCUS_MAXMIN_SDP_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace risfocus
{

// Thrown when the interior-point iteration fails to reach the requested
// tolerance within the iteration budget.
class SolverError : public std::runtime_error
{
  public:
    SolverError(const std::string &what, int iterations, double rel_gap)
        : std::runtime_error(what), iterations(iterations), rel_gap(rel_gap)
    {
    }

    int iterations;
    double rel_gap;
};

struct RelaxationOptions
{
    double tol = 1e-6;      // relative duality gap and residual target
    int max_iterations = 100;
};

struct RelaxationResult
{
    Eigen::MatrixXcd omega;  // N x N Hermitian, PSD, unit diagonal
    double gamma;            // certified optimum (dual objective; upper bound)
    double gamma_primal;     // primal objective at termination
    int iterations;
    double rel_gap;
    double primal_residual;
    double dual_residual;
};

// Solves the semidefinite relaxation of
//
//   max  min_l |v_l^H phi|^2   s.t. |phi_n| = 1 for all n,
//
// i.e. max gamma s.t. tr(Omega v_l v_l^H) >= gamma, Diag(Omega) = 1,
// Omega PSD, with the rank-one constraint dropped. `constraints` holds the
// v_l as columns. Dense Nesterov-Todd scaled predictor-corrector method;
// deterministic for fixed inputs and options.
RelaxationResult solve_maxmin_relaxation(const Eigen::MatrixXcd &constraints,
                                         const RelaxationOptions &options = {});

} // namespace risfocus

#endif
