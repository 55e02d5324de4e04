// Copyright 2026 The gwfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gwfield/statequant.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gwfield/error.hpp"
#include "gwfield/spectral.hpp"

namespace gwf {
namespace {

void require_square(const CMatrix &m, const char *what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        fail_argument(std::string(what) + " must be a non-empty square matrix");
    }
    if (!m.allFinite()) {
        fail_argument(std::string(what) + " must be finite");
    }
}

double max_abs(const CMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const CMatrix &m) {
    require_square(m, "density matrix");
    if (max_abs(m - m.adjoint()) > kStateTolerance) {
        fail_argument("density matrix is not Hermitian");
    }
    CMatrix h = 0.5 * (m + m.adjoint());
    if (std::abs(h.trace().real() - 1.0) > kStateTolerance) {
        fail_argument("density matrix trace is not 1",
                      "trace=" + std::to_string(h.trace().real()));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kStateTolerance) {
        fail_argument("density matrix has a negative eigenvalue");
    }
    return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::pure(const CVector &psi) {
    const double n2 = psi.squaredNorm();
    if (!(n2 > 0.0) || !psi.allFinite()) {
        fail_argument("pure state needs a finite nonzero vector");
    }
    return from_matrix(psi * psi.adjoint() / n2);
}

DensityMatrix DensityMatrix::mixture(const std::vector<double> &weights,
                                     const std::vector<CVector> &states) {
    if (weights.empty() || weights.size() != states.size()) {
        fail_argument("mixture needs one weight per state");
    }
    double total = 0.0;
    CMatrix m = CMatrix::Zero(states.front().size(), states.front().size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0) || states[i].size() != m.rows()) {
            fail_argument("mixture weights must be non-negative and states of equal dimension");
        }
        if (std::abs(states[i].squaredNorm() - 1.0) > 1e-10) {
            fail_argument("mixture states must be normalized");
        }
        m += weights[i] * states[i] * states[i].adjoint();
        total += weights[i];
    }
    if (std::abs(total - 1.0) > kStateTolerance) {
        fail_argument("mixture weights must sum to 1");
    }
    return from_matrix(m);
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

std::vector<double> DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
    const auto &ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

ProjectorSet ProjectorSet::create(std::vector<CMatrix> projectors) {
    if (projectors.empty()) {
        fail_argument("projector set is empty");
    }
    const Eigen::Index d = projectors.front().rows();
    CMatrix sum = CMatrix::Zero(d, d);
    for (std::size_t k = 0; k < projectors.size(); ++k) {
        const CMatrix &p = projectors[k];
        require_square(p, "projector");
        if (p.rows() != d) {
            fail_argument("projectors must share a dimension");
        }
        const std::string ctx = "k=" + std::to_string(k);
        if (max_abs(p - p.adjoint()) > kStateTolerance) {
            fail_argument("projector is not Hermitian", ctx);
        }
        if (max_abs(p * p - p) > kStateTolerance) {
            fail_argument("projector is not idempotent", ctx);
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (max_abs(projectors[j] * p) > kStateTolerance) {
                fail_argument("projectors are not mutually orthogonal",
                              "j=" + std::to_string(j) + " " + ctx);
            }
        }
        sum += p;
    }
    if (max_abs(sum - CMatrix::Identity(d, d)) > kStateTolerance) {
        fail_argument("projectors do not sum to the identity");
    }
    return ProjectorSet(std::move(projectors));
}

ProjectorSet ProjectorSet::computational(Eigen::Index d) {
    if (d < 1) {
        fail_argument("dimension must be positive");
    }
    std::vector<CMatrix> p;
    for (Eigen::Index i = 0; i < d; ++i) {
        CMatrix m = CMatrix::Zero(d, d);
        m(i, i) = 1.0;
        p.push_back(std::move(m));
    }
    return ProjectorSet(std::move(p));
}

ProjectorSet ProjectorSet::from_basis(const CMatrix &unitary) {
    require_square(unitary, "basis");
    std::vector<CMatrix> p;
    for (Eigen::Index i = 0; i < unitary.cols(); ++i) {
        p.push_back(unitary.col(i) * unitary.col(i).adjoint());
    }
    return create(std::move(p));
}

namespace {

void require_compatible(const DensityMatrix &rho, const ProjectorSet &projectors) {
    if (rho.dim() != projectors.dim()) {
        fail_argument("state and projectors differ in dimension");
    }
}

}  // namespace

std::vector<double> outcome_probabilities(const DensityMatrix &rho, const ProjectorSet &projectors) {
    require_compatible(rho, projectors);
    std::vector<double> p(projectors.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] = (projectors[k] * rho.matrix()).trace().real();
    }
    return p;
}

LudersResult luders_update(const DensityMatrix &rho, const ProjectorSet &projectors, std::size_t k) {
    require_compatible(rho, projectors);
    if (k >= projectors.size()) {
        fail_argument("outcome index out of range", "k=" + std::to_string(k));
    }
    const CMatrix &p = projectors[k];
    const double prob = (p * rho.matrix()).trace().real();
    if (!(prob > kProbabilityFloor)) {
        fail_argument("outcome has zero probability", "k=" + std::to_string(k));
    }
    CMatrix post = p * rho.matrix() * p / prob;
    post = 0.5 * (post + post.adjoint());
    return {DensityMatrix::from_matrix(post), prob};
}

DensityMatrix von_neumann_update(const DensityMatrix &rho, const ProjectorSet &projectors) {
    require_compatible(rho, projectors);
    CMatrix out = CMatrix::Zero(rho.dim(), rho.dim());
    for (std::size_t k = 0; k < projectors.size(); ++k) {
        out += projectors[k] * rho.matrix() * projectors[k];
    }
    return DensityMatrix::from_matrix(0.5 * (out + out.adjoint()));
}

CMatrix SchmidtResult::reconstruct() const {
    CMatrix m = CMatrix::Zero(left.rows(), right.rows());
    for (std::size_t i = 0; i < rank; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        m += coefficients[i] * left.col(ii) * right.col(ii).transpose();
    }
    return m;
}

SchmidtResult schmidt_decompose(const CMatrix &amplitudes, double tau_rel, bool normalize) {
    if (amplitudes.size() == 0 || !amplitudes.allFinite()) {
        fail_argument("amplitude matrix must be non-empty and finite");
    }
    if (!(tau_rel >= 0.0) || !(tau_rel < 1.0)) {
        fail_argument("Schmidt threshold must lie in [0, 1)");
    }
    const double norm = amplitudes.norm();
    if (norm == 0.0) {
        fail_argument("cannot decompose the zero state");
    }
    if (!normalize && std::abs(norm - 1.0) > 1e-10) {
        fail_argument("amplitude matrix is not normalized", "norm=" + std::to_string(norm));
    }
    const CMatrix c = normalize ? CMatrix(amplitudes / norm) : amplitudes;
    Eigen::JacobiSVD<CMatrix> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &s = svd.singularValues();
    SchmidtResult r;
    r.threshold = tau_rel * s(0);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > 0.0 && s(i) >= r.threshold) {
            r.coefficients.push_back(s(i));
        }
    }
    r.rank = r.coefficients.size();
    const auto rank = static_cast<Eigen::Index>(r.rank);
    r.left = svd.matrixU().leftCols(rank);
    // C = U S V^H, so the right Schmidt vectors are the columns of conj(V).
    r.right = svd.matrixV().leftCols(rank).conjugate();
    return r;
}

CommutatorReport commutator_check(const ComplexField &psi, double hbar_units) {
    const Grid &grid = psi.grid();
    const int dim = grid.dim();
    const std::size_t n = grid.size();
    double psi_max = 0.0;
    for (const cplx &v : psi.values()) {
        psi_max = std::max(psi_max, std::abs(v));
    }
    if (psi_max == 0.0) {
        fail_argument("commutator check needs a nonzero field");
    }
    CommutatorReport report;

    // Seam: points within 5% of the box from x = +-L/2 on any axis.
    for (std::size_t f = 0; f < n && !report.seam_warning; ++f) {
        const auto idx = grid.unravel(f);
        for (int a = 0; a < dim; ++a) {
            const double x = grid.centered_coordinate(a, idx[a]);
            if (std::abs(x) > 0.45 * grid.length(a) && std::abs(psi[f]) > 1e-8 * psi_max) {
                report.seam_warning = true;
            }
        }
    }
    const auto coeff = spectral::forward(grid, psi.values());
    double total = 0.0;
    double upper = 0.0;
    for (std::size_t f = 0; f < n; ++f) {
        const auto idx = grid.unravel(f);
        const double w = std::norm(coeff[f]);
        total += w;
        for (int a = 0; a < dim; ++a) {
            const auto m = static_cast<double>(grid.n(a));
            if (std::abs(grid.wavenumber(a, idx[a])) * grid.length(a) / (2.0 * std::numbers::pi) >
                m / 4.0) {
                upper += w;
                break;
            }
        }
    }
    report.band_warning = upper > 1e-10 * total;

    for (int i = 0; i < dim; ++i) {
        const auto d_psi = spectral::derivative(grid, psi.values(), i);
        for (int j = 0; j < dim; ++j) {
            std::vector<cplx> x_psi(n);
            std::vector<double> x(n);
            for (std::size_t f = 0; f < n; ++f) {
                x[f] = grid.centered_coordinate(j, grid.unravel(f)[j]);
                x_psi[f] = x[f] * psi[f];
            }
            const auto d_x_psi = spectral::derivative(grid, x_psi, i);
            double worst = 0.0;
            const cplx minus_i{0.0, -1.0};
            for (std::size_t f = 0; f < n; ++f) {
                cplx r = minus_i * d_x_psi[f] - x[f] * (minus_i * d_psi[f]);
                if (i == j) {
                    r += cplx{0.0, 1.0} * psi[f];
                }
                worst = std::max(worst, std::abs(r));
            }
            const double res = hbar_units * worst / psi_max;
            report.entries.push_back({i, j, res});
            report.max_residual = std::max(report.max_residual, res);
        }
    }
    return report;
}

ProjectorScalingReport projector_scaling_check(const CVector &state, std::complex<double> lambda) {
    if (lambda == std::complex<double>(0.0, 0.0)) {
        fail_argument("scaling factor must be nonzero");
    }
    const double n2 = state.squaredNorm();
    if (!(n2 > 0.0)) {
        fail_argument("state must be nonzero");
    }
    const CVector v = lambda * state;
    const CMatrix p = v * v.adjoint();
    const CMatrix p_unit = state * state.adjoint() / n2;
    ProjectorScalingReport r;
    r.scale = std::norm(lambda) * n2;
    r.residual = (p * p - p).norm();
    r.predicted = std::abs(r.scale * r.scale - r.scale) * p_unit.norm();
    r.idempotent = r.residual < 1e-12;
    return r;
}

}  // namespace gwf
