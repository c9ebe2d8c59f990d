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
//
// Primal-dual path-following solver for the max-min focusing relaxation.
//
// Conic form (minimization):
//
//   min  -gamma
//   s.t. Omega_kk = 1                          k = 0..N-1
//        v_l^H Omega v_l - s_l - gamma = 0     l = 0..L-1
//        Omega in H^N_+ (Hermitian PSD), s in R^L_+, gamma in R_+
//
// gamma >= 0 is not binding (Omega = I is feasible with value min ||v_l||^2),
// so the sign restriction loses nothing and keeps every variable conic.
// Every constraint touches the SDP block through a rank-one matrix
// (e_k e_k^H or v_l v_l^H), which makes the Nesterov-Todd Schur complement
// the elementwise squared modulus of a Gram matrix.

#include "risfocus/maxmin_sdp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace risfocus
{

namespace
{

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

MatrixXcd hermitize(const MatrixXcd &m) { return 0.5 * (m + m.adjoint()); }

double inner(const MatrixXcd &a, const MatrixXcd &b)
{
    return a.cwiseProduct(b.conjugate()).sum().real();
}

// Largest step alpha with X + alpha*D staying PSD; inf when unconstrained.
double sdp_boundary_step(const Eigen::LLT<MatrixXcd> &llt_x, const MatrixXcd &d)
{
    const auto &l = llt_x.matrixL();
    MatrixXcd s1 = l.solve(d);
    MatrixXcd s2 = l.solve(MatrixXcd(s1.adjoint()));
    double lambda_min = Eigen::SelfAdjointEigenSolver<MatrixXcd>(hermitize(s2), Eigen::EigenvaluesOnly)
                            .eigenvalues()
                            .minCoeff();
    if (lambda_min >= 0.0)
        return std::numeric_limits<double>::infinity();
    return -1.0 / lambda_min;
}

double lp_boundary_step(const VectorXd &x, const VectorXd &d)
{
    double alpha = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < x.size(); i++)
        if (d[i] < 0.0)
            alpha = std::min(alpha, -x[i] / d[i]);
    return alpha;
}

struct State
{
    MatrixXcd xs; // SDP primal block (Omega iterate)
    VectorXd xl;  // LP primal block: [s_0..s_{L-1}, gamma]
    VectorXd y;   // constraint multipliers, size N + L
    MatrixXcd zs; // SDP dual block
    VectorXd zl;  // LP dual block
};

struct Direction
{
    MatrixXcd dxs;
    VectorXd dxl;
    VectorXd dy;
    MatrixXcd dzs;
    VectorXd dzl;
};

class MaxMinIpm
{
  public:
    MaxMinIpm(const MatrixXcd &v, const RelaxationOptions &opt)
        : v_(v), opt_(opt), n_(v.rows()), l_(v.cols()), m_(n_ + l_), degree_(n_ + l_ + 1)
    {
    }

    RelaxationResult run();

  private:
    // A(X): constraint values of the primal blocks.
    VectorXd apply_constraints(const MatrixXcd &xs, const VectorXd &xl) const
    {
        VectorXd out = quad_forms(xs);
        for (Index l = 0; l < l_; l++)
            out[n_ + l] -= xl[l] + xl[l_];
        return out;
    }

    // A^*(y) restricted to the SDP block.
    MatrixXcd adjoint_sdp(const VectorXd &y) const
    {
        MatrixXcd out = MatrixXcd::Zero(n_, n_);
        out.diagonal() = y.head(n_).cast<std::complex<double>>();
        out += v_ * y.tail(l_).cast<std::complex<double>>().asDiagonal() * v_.adjoint();
        return out;
    }

    // Diagonal and v_l-quadratic forms of a Hermitian matrix, as a vector
    // over constraint rows.
    VectorXd quad_forms(const MatrixXcd &h) const
    {
        VectorXd out(m_);
        for (Index k = 0; k < n_; k++)
            out[k] = h(k, k).real();
        MatrixXcd hv = h * v_;
        for (Index l = 0; l < l_; l++)
            out[n_ + l] = std::real(v_.col(l).dot(hv.col(l)));
        return out;
    }

    Direction solve_newton(const Eigen::LDLT<MatrixXd> &schur, const MatrixXd &schur_mat,
                           const MatrixXcd &w, const VectorXd &w2, const VectorXd &rp,
                           const MatrixXcd &rd_s, const VectorXd &rd_l, const MatrixXcd &rc_s,
                           const VectorXd &rc_l) const
    {
        // Right-hand side of the reduced (Schur) system.
        MatrixXcd rc_minus = rc_s - w * rd_s * w;
        VectorXd h = rp - quad_forms(rc_minus);
        for (Index l = 0; l < l_; l++)
            h[n_ + l] += (rc_l[l] - w2[l] * rd_l[l]) + (rc_l[l_] - w2[l_] * rd_l[l_]);

        Direction d;
        d.dy = schur.solve(h);
        d.dy += schur.solve(h - schur_mat * d.dy); // one refinement pass

        d.dzs = hermitize(rd_s - adjoint_sdp(d.dy));
        double sum_dyu = d.dy.tail(l_).sum();
        d.dzl.resize(l_ + 1);
        for (Index l = 0; l < l_; l++)
            d.dzl[l] = rd_l[l] + d.dy[n_ + l];
        d.dzl[l_] = rd_l[l_] + sum_dyu;

        d.dxs = hermitize(rc_s - w * d.dzs * w);
        d.dxl = rc_l - w2.cwiseProduct(d.dzl);
        return d;
    }

    MatrixXcd v_;
    RelaxationOptions opt_;
    Index n_, l_, m_;
    double degree_;
};

RelaxationResult MaxMinIpm::run()
{
    // Strictly feasible primal start: Omega = I, gamma = min_l ||v_l||^2 / 2.
    VectorXd norms(l_);
    for (Index l = 0; l < l_; l++)
        norms[l] = v_.col(l).squaredNorm();
    if (norms.minCoeff() <= 0.0)
        throw std::invalid_argument("solve_maxmin_relaxation: zero constraint vector");

    State st;
    st.xs = MatrixXcd::Identity(n_, n_);
    st.xl.resize(l_ + 1);
    st.xl[l_] = 0.5 * norms.minCoeff();
    for (Index l = 0; l < l_; l++)
        st.xl[l] = norms[l] - st.xl[l_];

    // Strictly feasible dual start: y_head pushes the diagonal past the
    // spectral load of the constraint terms, so zs >= I.
    double load = 2.0 / static_cast<double>(l_) * norms.sum() + 1.0;
    st.y.resize(m_);
    st.y.head(n_).setConstant(-load);
    st.y.tail(l_).setConstant(2.0 / static_cast<double>(l_));
    st.zs = hermitize(-adjoint_sdp(st.y));
    st.zl.resize(l_ + 1);
    st.zl.head(l_) = st.y.tail(l_);
    st.zl[l_] = st.y.tail(l_).sum() - 1.0;

    VectorXd b = VectorXd::Zero(m_);
    b.head(n_).setOnes();

    const double eta = 0.98; // fraction of the distance to the cone boundary

    double rel_gap = std::numeric_limits<double>::infinity();
    double pinf = 0.0, dinf = 0.0;
    std::vector<double> mu_history;

    for (int iter = 0; iter < opt_.max_iterations; iter++)
    {
        // Residuals (stay near roundoff thanks to the feasible start).
        VectorXd constraint_values = apply_constraints(st.xs, st.xl);
        VectorXd rp = b - constraint_values;
        MatrixXcd rd_s = hermitize(-adjoint_sdp(st.y) - st.zs);
        VectorXd rd_l(l_ + 1);
        for (Index l = 0; l < l_; l++)
            rd_l[l] = st.y[n_ + l] - st.zl[l];
        rd_l[l_] = -1.0 + st.y.tail(l_).sum() - st.zl[l_];

        double mu = (inner(st.xs, st.zs) + st.xl.dot(st.zl)) / degree_;

        double gamma_primal = st.xl[l_];
        double gamma_dual = -st.y.head(n_).sum();
        double denom = 1.0 + std::abs(gamma_primal) + std::abs(gamma_dual);
        rel_gap = std::abs(gamma_dual - gamma_primal) / denom;
        double comp_gap = mu * degree_ / denom;
        // Residuals relative to the magnitude of the quantities involved;
        // the gain rows scale like N^2.
        pinf = rp.cwiseAbs().maxCoeff() /
               (1.0 + std::max(1.0, constraint_values.cwiseAbs().maxCoeff()));
        dinf = std::max(rd_s.cwiseAbs().maxCoeff(), rd_l.cwiseAbs().maxCoeff()) / 2.0;

        if (std::getenv("RISFOCUS_IPM_TRACE"))
            std::fprintf(stderr, "ipm %3d mu=%.3e relgap=%.3e compgap=%.3e pinf=%.3e dinf=%.3e\n",
                         iter, mu, rel_gap, comp_gap, pinf, dinf);

        if (std::max(rel_gap, comp_gap) <= opt_.tol && pinf <= opt_.tol && dinf <= opt_.tol)
        {
            RelaxationResult res;
            res.omega = hermitize(st.xs);
            res.gamma = gamma_dual;
            res.gamma_primal = gamma_primal;
            res.iterations = iter;
            res.rel_gap = rel_gap;
            res.primal_residual = pinf;
            res.dual_residual = dinf;
            return res;
        }

        // Numerical floor: once mu stops making progress the requested
        // tolerance is beyond reach; report instead of degrading further.
        mu_history.push_back(mu);
        if (mu_history.size() >= 9 && mu > 0.5 * mu_history[mu_history.size() - 9])
            throw SolverError("interior-point method stalled before reaching the requested "
                              "tolerance (relative gap " +
                                  std::to_string(rel_gap) + ", primal residual " +
                                  std::to_string(pinf) + ")",
                              iter, rel_gap);

        // Nesterov-Todd scaling point W (W Z W = X) via the standard
        // Cholesky/SVD recipe, plus the LP scaling x/z.
        Eigen::LLT<MatrixXcd> llt_x(hermitize(st.xs));
        Eigen::LLT<MatrixXcd> llt_z(hermitize(st.zs));
        if (llt_x.info() != Eigen::Success || llt_z.info() != Eigen::Success)
            throw SolverError("interior-point iterate left the cone", iter, rel_gap);

        MatrixXcd lx = llt_x.matrixL();
        MatrixXcd lz = llt_z.matrixL();
        Eigen::BDCSVD<MatrixXcd> svd(lz.adjoint() * lx, Eigen::ComputeThinU | Eigen::ComputeThinV);
        MatrixXcd g = lx * svd.matrixV() *
                      svd.singularValues().cwiseSqrt().cwiseInverse().asDiagonal();
        MatrixXcd w = hermitize(g * g.adjoint());

        VectorXd w2 = st.xl.cwiseQuotient(st.zl);

        // Schur complement: |[I V]^H W [I V]|^2 elementwise, plus LP terms.
        MatrixXd schur_mat(m_, m_);
        {
            MatrixXcd wv = w * v_;
            schur_mat.topLeftCorner(n_, n_) = w.cwiseAbs2();
            schur_mat.topRightCorner(n_, l_) = wv.cwiseAbs2();
            schur_mat.bottomLeftCorner(l_, n_) = schur_mat.topRightCorner(n_, l_).transpose();
            schur_mat.bottomRightCorner(l_, l_) = (v_.adjoint() * wv).cwiseAbs2();
            schur_mat.bottomRightCorner(l_, l_).diagonal() += w2.head(l_);
            schur_mat.bottomRightCorner(l_, l_).array() += w2[l_];
        }
        // Near-duplicate constraint directions drive the slack scalings to
        // zero together, so the factorization gets a deterministic ridge
        // escalation as a fallback.
        Eigen::LDLT<MatrixXd> schur(schur_mat);
        for (double ridge = 1e-14; schur.info() != Eigen::Success && ridge <= 1e-6; ridge *= 100.0)
        {
            MatrixXd bumped = schur_mat;
            bumped.diagonal().array() += ridge * schur_mat.diagonal().maxCoeff();
            schur.compute(bumped);
        }
        if (schur.info() != Eigen::Success)
            throw SolverError("Schur complement factorization failed", iter, rel_gap);

        // Predictor (affine scaling) direction: sigma = 0.
        MatrixXcd rc_s = -st.xs;
        VectorXd rc_l = -st.xl;
        Direction aff = solve_newton(schur, schur_mat, w, w2, rp, rd_s, rd_l, rc_s, rc_l);

        double ap = std::min({1.0, sdp_boundary_step(llt_x, aff.dxs), lp_boundary_step(st.xl, aff.dxl)});
        double ad = std::min({1.0, sdp_boundary_step(llt_z, aff.dzs), lp_boundary_step(st.zl, aff.dzl)});

        double mu_aff = (inner(st.xs + ap * aff.dxs, st.zs + ad * aff.dzs) +
                         (st.xl + ap * aff.dxl).dot(st.zl + ad * aff.dzl)) /
                        degree_;
        double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 1e-10, 1.0);

        // Centering step toward sigma*mu on the central path.
        MatrixXcd z_inv = llt_z.solve(MatrixXcd::Identity(n_, n_));
        rc_s = hermitize(sigma * mu * z_inv - st.xs);
        rc_l = (sigma * mu) * st.zl.cwiseInverse() - st.xl;
        Direction dir = solve_newton(schur, schur_mat, w, w2, rp, rd_s, rd_l, rc_s, rc_l);

        double bp = std::min({1.0, eta * sdp_boundary_step(llt_x, dir.dxs),
                              eta * lp_boundary_step(st.xl, dir.dxl)});
        double bd = std::min({1.0, eta * sdp_boundary_step(llt_z, dir.dzs),
                              eta * lp_boundary_step(st.zl, dir.dzl)});

        if (bp < 1e-10 && bd < 1e-10)
            throw SolverError("interior-point method stalled", iter, rel_gap);

        st.xs = hermitize(st.xs + bp * dir.dxs);
        st.xl += bp * dir.dxl;
        st.y += bd * dir.dy;
        st.zs = hermitize(st.zs + bd * dir.dzs);
        st.zl += bd * dir.dzl;
    }

    throw SolverError("interior-point method did not converge within the iteration budget",
                      opt_.max_iterations, rel_gap);
}

} // namespace

RelaxationResult solve_maxmin_relaxation(const MatrixXcd &constraints, const RelaxationOptions &options)
{
    if (constraints.rows() < 1)
        throw std::invalid_argument("solve_maxmin_relaxation: empty dimension");
    if (constraints.cols() < 1)
        throw std::invalid_argument("solve_maxmin_relaxation: no constraint vectors");
    if (options.tol <= 0.0)
        throw std::invalid_argument("solve_maxmin_relaxation: tolerance must be positive");

    // Exactly duplicated constraint vectors (degenerate ray sets) add
    // nothing to the feasible set but make the Schur system singular;
    // solve with the unique set. First occurrences keep their order.
    std::vector<Eigen::Index> unique_cols;
    for (Eigen::Index c = 0; c < constraints.cols(); c++)
    {
        bool duplicate = false;
        for (Eigen::Index u : unique_cols)
            if (constraints.col(c) == constraints.col(u))
            {
                duplicate = true;
                break;
            }
        if (!duplicate)
            unique_cols.push_back(c);
    }
    MatrixXcd reduced(constraints.rows(), static_cast<Eigen::Index>(unique_cols.size()));
    for (std::size_t i = 0; i < unique_cols.size(); i++)
        reduced.col(static_cast<Eigen::Index>(i)) = constraints.col(unique_cols[i]);

    // Equilibrate: a single global rescaling of the constraint vectors is
    // an exact reparametrization of gamma and keeps the Schur system far
    // better conditioned (gain rows would otherwise scale like N^2).
    double mean_sq = reduced.colwise().squaredNorm().mean();
    if (mean_sq <= 0.0)
        throw std::invalid_argument("solve_maxmin_relaxation: zero constraint vector");
    double s2 = 1.0 / mean_sq;
    RelaxationResult res = MaxMinIpm(reduced * std::sqrt(s2), options).run();
    res.gamma /= s2;
    res.gamma_primal /= s2;
    return res;
}

} // namespace risfocus
