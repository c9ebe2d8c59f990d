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

#ifndef RISFOCUS_SDR_HPP
#define RISFOCUS_SDR_HPP

#include "risfocus/maxmin_sdp.hpp"
#include "risfocus/scenario.hpp"

#include <utility>
#include <vector>

namespace risfocus
{

// Max-min focusing instance: one constraint vector per (incident,
// reflected) ray pair, plus the squared unit-cell scale that turns the
// unit-scale optimum into response power.
struct MaxMinProblem
{
    Eigen::MatrixXcd constraint_vectors; // N x L, column per pair
    double scale;                        // |g_uc|^2
    int dimension;                       // N
};

// Relaxed optimum plus the rank-one restored codeword. gamma_restored is
// recomputed by direct evaluation of the response at every constraint,
// never read from solver internals.
struct SdrSolution
{
    Eigen::MatrixXcd omega;
    double gamma_relaxed;
    PhaseVector codeword;
    double gamma_restored;
    double leading_eigenvalue;
};

// Enumerates all |incident| x |reflected| ray pairs (incident-major order)
// and builds their response vectors.
MaxMinProblem build_problem(const ArrayGeometry &g, const Wave &w,
                            const std::vector<AngleDirection> &incident_rays,
                            const std::vector<AngleDirection> &reflected_rays, double g_uc);

// Solves the semidefinite relaxation; returns (omega, gamma_relaxed) with
// gamma_relaxed the certified optimum of the relaxed problem (an upper
// bound on any unit-modulus configuration). Throws SolverError on
// non-convergence.
std::pair<Eigen::MatrixXcd, double> solve_relaxed(const MaxMinProblem &p, double tol);

// Leading-eigenvector restoration: returns the unit-modulus-normalized
// eigenvector (global phase fixed so the first nonzero entry is real
// positive) and the leading eigenvalue. Near-degenerate leading
// eigenspaces are resolved by a lexicographic tie-break; entries below
// 1e-12 in magnitude map to phase 0 with a diagnostic on stderr.
std::pair<Eigen::VectorXcd, double> restore_rank_one(const Eigen::MatrixXcd &omega);

// Full pipeline: build_problem -> solve_relaxed -> restore_rank_one. The
// stored codeword follows the same convention as linear_codeword, so
// response() evaluated at a constraint pair reproduces the optimized gain.
SdrSolution opt_codeword(const ArrayGeometry &g, const Wave &w,
                         const std::vector<AngleDirection> &incident_rays,
                         const std::vector<AngleDirection> &reflected_rays, double g_uc, double tol);

// Optimization-based codebook of `source_ris`: one codeword per target,
// from the BS->source arrival rays and source->target departure rays.
// Returned sorted by target id.
std::vector<std::pair<int, SdrSolution>> opt_codebook(const Scenario &sc, int source_ris, double tol);

} // namespace risfocus

#endif
