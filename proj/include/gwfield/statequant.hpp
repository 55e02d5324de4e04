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

#pragma once

// Finite-dimensional state algebra: density matrices, projective updates
// (Lueders and von Neumann), Schmidt decomposition, and the canonical
// commutator on a periodic grid.

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "gwfield/field.hpp"

namespace gwf {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kStateTolerance = 1e-12;
/// Outcomes with Tr(P rho) at or below this are treated as impossible.
inline constexpr double kProbabilityFloor = 1e-14;

/// Hermitian, positive semi-definite, unit trace (all to 1e-12). Stored
/// exactly Hermitian.
class DensityMatrix {
   public:
    static DensityMatrix from_matrix(const CMatrix &m);
    /// |psi><psi| / <psi|psi>.
    static DensityMatrix pure(const CVector &psi);
    /// sum_i w_i |psi_i><psi_i| with w_i >= 0 summing to 1 and each psi_i normalized.
    static DensityMatrix mixture(const std::vector<double> &weights,
                                 const std::vector<CVector> &states);

    const CMatrix &matrix() const {
        return m_;
    }
    Eigen::Index dim() const {
        return m_.rows();
    }
    /// Tr(rho^2)
    double purity() const;
    std::vector<double> eigenvalues() const;

   private:
    explicit DensityMatrix(CMatrix m) : m_(std::move(m)) {
    }
    CMatrix m_;
};

/// Complete set of mutually orthogonal Hermitian projectors.
class ProjectorSet {
   public:
    static ProjectorSet create(std::vector<CMatrix> projectors);
    /// |i><i| for i = 0..d-1.
    static ProjectorSet computational(Eigen::Index d);
    /// Rank-1 projectors onto the columns of a unitary matrix.
    static ProjectorSet from_basis(const CMatrix &unitary);

    std::size_t size() const {
        return p_.size();
    }
    const CMatrix &operator[](std::size_t k) const {
        return p_[k];
    }
    Eigen::Index dim() const {
        return p_.front().rows();
    }

   private:
    explicit ProjectorSet(std::vector<CMatrix> p) : p_(std::move(p)) {
    }
    std::vector<CMatrix> p_;
};

/// Tr(P_k rho) for every k.
std::vector<double> outcome_probabilities(const DensityMatrix &rho, const ProjectorSet &projectors);

struct LudersResult {
    DensityMatrix state;
    double probability;
};

/// (P_k rho P_k / p, p) with p = Tr(P_k rho). Throws "outcome has zero
/// probability" when p <= kProbabilityFloor.
LudersResult luders_update(const DensityMatrix &rho, const ProjectorSet &projectors, std::size_t k);

/// sum_k P_k rho P_k
DensityMatrix von_neumann_update(const DensityMatrix &rho, const ProjectorSet &projectors);

struct SchmidtResult {
    std::vector<double> coefficients;  ///< descending, all >= threshold
    CMatrix left;                      ///< dA x rank, orthonormal columns
    CMatrix right;                     ///< dB x rank, orthonormal columns
    std::size_t rank = 0;
    double threshold = 0.0;

    bool entangled() const {
        return rank > 1;
    }
    /// sum_i lambda_i |a_i> |b_i>^T as a dA x dB matrix.
    CMatrix reconstruct() const;
};

/// SVD of the amplitude matrix C_ab of sum_ab C_ab |a>|b>. Coefficients below
/// tau_rel * lambda_max are dropped. When `normalize` is false the input must
/// have unit Frobenius norm to 1e-10.
SchmidtResult schmidt_decompose(const CMatrix &amplitudes, double tau_rel = 1e-10,
                                bool normalize = false);

struct CommutatorEntry {
    int i;
    int j;
    double residual;
};

struct CommutatorReport {
    std::vector<CommutatorEntry> entries;  ///< every axis pair (i, j)
    double max_residual = 0.0;
    /// Set when the field is not negligible near the sawtooth seam at +-L/2,
    /// where the coordinate operator is discontinuous.
    bool seam_warning = false;
    /// Set when more than 1e-10 of the spectral weight sits in the upper half of the modes.
    bool band_warning = false;
};

/// max |D_i(x_j psi) - x_j D_i psi + i delta_ij psi| / max |psi| with
/// D_i = -i d/dx_i (spectral) and x_j the centred sawtooth coordinate,
/// multiplied by `hbar_units` (pass hbar for the momentum form).
CommutatorReport commutator_check(const ComplexField &psi, double hbar_units = 1.0);

struct ProjectorScalingReport {
    double scale = 0.0;  ///< s = |lambda|^2 <psi|psi>, so P = s P_unit
    double residual = 0.0;  ///< ||P^2 - P||_F
    double predicted = 0.0;  ///< |s^2 - s| ||P_unit||_F
    bool idempotent = false;  ///< residual < 1e-12
};

/// Builds P = |lambda psi><lambda psi| and measures how far it is from idempotent.
ProjectorScalingReport projector_scaling_check(const CVector &state, std::complex<double> lambda);

}  // namespace gwf
