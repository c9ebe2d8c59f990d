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

#include "risfocus/sdr.hpp"

#include "risfocus/kernels.hpp"

#include <cmath>
#include <complex>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace risfocus
{

namespace
{

constexpr double zero_entry_tol = 1e-12;
constexpr double degenerate_eig_tol = 1e-9;

// Fixes the global phase so the first entry above the zero threshold is
// real positive.
Eigen::VectorXcd canonical_phase(const Eigen::VectorXcd &u)
{
    for (Eigen::Index i = 0; i < u.size(); i++)
        if (std::abs(u[i]) >= zero_entry_tol)
            return u * (std::conj(u[i]) / std::abs(u[i]));
    return u;
}

bool lex_less(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b)
{
    for (Eigen::Index i = 0; i < a.size(); i++)
    {
        if (a[i].real() != b[i].real())
            return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag())
            return a[i].imag() < b[i].imag();
    }
    return false;
}

} // namespace

MaxMinProblem build_problem(const ArrayGeometry &g, const Wave &w,
                            const std::vector<AngleDirection> &incident_rays,
                            const std::vector<AngleDirection> &reflected_rays, double g_uc)
{
    if (incident_rays.empty() || reflected_rays.empty())
        throw std::invalid_argument("build_problem: empty ray list");

    Eigen::Index n = g.size();
    Eigen::Index pairs = static_cast<Eigen::Index>(incident_rays.size() * reflected_rays.size());
    Eigen::MatrixXcd v(n, pairs);
    Eigen::Index col = 0;
    for (const auto &incident : incident_rays)
        for (const auto &reflected : reflected_rays)
            v.col(col++) = response_vector(g, w, RayPair{incident, reflected});

    return {std::move(v), g_uc * g_uc, static_cast<int>(n)};
}

std::pair<Eigen::MatrixXcd, double> solve_relaxed(const MaxMinProblem &p, double tol)
{
    RelaxationOptions opt;
    opt.tol = tol;
    // The relaxation is solved at unit scale; the |g_uc|^2 factor is a
    // pure rescaling of gamma, so the iterate path (and the restored
    // codeword downstream) is exactly scale-invariant.
    RelaxationResult res = solve_maxmin_relaxation(p.constraint_vectors, opt);
    return {std::move(res.omega), p.scale * res.gamma};
}

std::pair<Eigen::VectorXcd, double> restore_rank_one(const Eigen::MatrixXcd &omega)
{
    if (omega.rows() != omega.cols() || omega.rows() < 1)
        throw std::invalid_argument("restore_rank_one: omega must be square and non-empty");

    Eigen::MatrixXcd h = 0.5 * (omega + omega.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("restore_rank_one: eigendecomposition failed");

    Eigen::Index n = h.rows();
    const auto &evals = es.eigenvalues(); // ascending
    double lambda1 = evals[n - 1];

    // Deterministic representative of a (nearly) degenerate leading
    // eigenspace: phase-fix every candidate, keep the lexicographically
    // smallest by (real, imag) entry comparison.
    Eigen::VectorXcd best = canonical_phase(es.eigenvectors().col(n - 1));
    for (Eigen::Index i = n - 2; i >= 0 && lambda1 - evals[i] <= degenerate_eig_tol * std::abs(lambda1); i--)
    {
        Eigen::VectorXcd candidate = canonical_phase(es.eigenvectors().col(i));
        if (lex_less(candidate, best))
            best = candidate;
    }

    Eigen::VectorXcd codeword(n);
    int zeros = 0;
    for (Eigen::Index i = 0; i < n; i++)
    {
        double mag = std::abs(best[i]);
        if (mag < zero_entry_tol)
        {
            codeword[i] = 1.0;
            zeros++;
        }
        else
            codeword[i] = best[i] / mag;
    }
    if (zeros > 0)
        std::cerr << "risfocus: restore_rank_one: " << zeros
                  << " eigenvector entr" << (zeros == 1 ? "y" : "ies")
                  << " below " << zero_entry_tol << "; phase 0 substituted\n";

    return {std::move(codeword), lambda1};
}

SdrSolution opt_codeword(const ArrayGeometry &g, const Wave &w,
                         const std::vector<AngleDirection> &incident_rays,
                         const std::vector<AngleDirection> &reflected_rays, double g_uc, double tol)
{
    MaxMinProblem problem = build_problem(g, w, incident_rays, reflected_rays, g_uc);
    auto [omega, gamma_relaxed] = solve_relaxed(problem, tol);
    auto [phi, lambda1] = restore_rank_one(omega);

    // The restored phi multiplies constraint vectors through phi^H v; the
    // stored reflection coefficients follow the summation convention of
    // response(), hence the conjugate.
    PhaseVector codeword(phi.conjugate(), g);

    double worst = std::numeric_limits<double>::infinity();
    for (Eigen::Index l = 0; l < problem.constraint_vectors.cols(); l++)
    {
        std::complex<double> r =
            kernels::dotu(codeword.coefficients.data(), problem.constraint_vectors.col(l).data(),
                          static_cast<std::size_t>(problem.dimension));
        worst = std::min(worst, problem.scale * std::norm(r));
    }

    return {std::move(omega), gamma_relaxed, std::move(codeword), worst, lambda1};
}

std::vector<std::pair<int, SdrSolution>> opt_codebook(const Scenario &sc, int source_ris, double tol)
{
    const PanelNode &source = sc.node(source_ris);
    if (source_ris < 1)
        throw std::invalid_argument("opt_codebook: source must be a RIS id");

    double g_uc = unit_cell_factor(source.geometry, sc.wave);
    std::vector<AngleDirection> incident = bs_arrival_angles(sc, source_ris);

    std::vector<std::pair<int, SdrSolution>> book;
    for (int target = 1; target <= sc.ris_count(); target++)
    {
        if (target == source_ris)
            continue;
        std::vector<AngleDirection> reflected = departure_angles(sc, source_ris, target);
        try
        {
            book.emplace_back(target,
                              opt_codeword(source.geometry, sc.wave, incident, reflected, g_uc, tol));
        }
        catch (const SolverError &e)
        {
            throw SolverError("codeword " + std::to_string(source_ris) + " -> " +
                                  std::to_string(target) + ": " + e.what(),
                              e.iterations, e.rel_gap);
        }
    }
    return book;
}

} // namespace risfocus
