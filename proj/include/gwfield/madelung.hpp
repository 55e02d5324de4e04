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

// Polar (Madelung) decomposition psi = sqrt(rho) exp(i S / hbar), the quantum
// potential, Hamilton-Jacobi and continuity residuals, energy bookkeeping and
// Bohm-type trajectories.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "gwfield/field.hpp"
#include "gwfield/wavemech.hpp"

namespace gwf {

/// Points with rho below kRhoFloorFraction * max(rho) are masked: their phase
/// is undefined and they are excluded from every residual.
inline constexpr double kRhoFloorFraction = 1e-12;

struct MadelungForm {
    Grid grid;
    std::vector<double> rho;    ///< |psi|^2
    /// S / hbar, unwrapped along each axis from the origin. Masked points keep
    /// the wrapped argument and take no part in the unwrapping.
    std::vector<double> phase;
    std::vector<bool> masked;   ///< rho < floor
    double rho_floor = 0.0;
    std::size_t unwrap_breaks = 0;  ///< unwrap chains interrupted by masked points

    /// sqrt(rho) exp(i phase) at every point.
    ComplexField reconstruct() const;
    std::size_t unmasked_count() const;
};

MadelungForm polar_decompose(const ComplexField &psi);

/// lap(sqrt rho)/sqrt rho for every point, computed from psi as
/// Re(lap psi / psi) + |Im(grad psi / psi)|^2 so that sign changes of a real
/// amplitude (box-mode nodes) do not spoil spectral accuracy. Masked points are 0.
std::vector<double> classicality_defect(const ComplexField &psi, const std::vector<bool> &masked);

/// grad(S)/hbar = Im(conj(psi) grad psi) / rho per axis; zero at masked points.
std::vector<std::vector<double>> phase_gradient(const ComplexField &psi,
                                                const std::vector<bool> &masked);

struct QuantumPotentialField {
    Grid grid;
    std::vector<double> Q;                    ///< erg
    std::vector<double> classicality_defect;  ///< 1/cm^2
    std::vector<std::vector<double>> grad_Q;  ///< erg/cm per axis
    std::vector<bool> masked;
    double m_star = 0.0;  ///< g

    /// rho-weighted mean of Q over unmasked points.
    double weighted_mean(std::span<const double> rho) const;
};

/// Q = -(hbar^2 / 2 m*) lap(sqrt rho)/sqrt rho. Throws if every point is masked.
QuantumPotentialField quantum_potential(const MadelungForm &form, double m_star);

/// RMS over unmasked points of dS/dt + |grad S|^2 / 2m* + hbar V0 + Q (erg).
/// `dS_dt` is in erg, one value per grid point; an empty span is an error.
double hj_residual(const MadelungForm &form, const EffectiveMassParams &params,
                   std::span<const double> dS_dt);

/// RMS over unmasked points of d rho/dt + div(rho grad S / m*), divided by
/// max|d rho/dt| plus a floor of 1e-4 rho_max times the state's own
/// characteristic rate hbar (<k^2> + k_1^2) / 2m*, k_1 the fundamental
/// wavenumber of the box.
double continuity_residual(const MadelungForm &form, const EffectiveMassParams &params,
                           std::span<const double> rho_dot);

/// Energy bookkeeping for E = p c + Q.
///
/// `E` is the rho-weighted mean of the Hamilton-Jacobi energy
/// |grad S|^2 / 2m* + Q (+ hbar V0 + U if a confining potential U is given).
/// `pc` is hbar c <|k|> from the Fourier spectrum; `pc_phase` is hbar c <|grad S|/hbar>.
/// For travelling eigenstates the two momenta agree. A real standing wave has
/// zero phase gradient but nonzero spectral |k|; `momentum_discrepancy` flags
/// that case instead of choosing one.
struct EnergyDecomposition {
    double E = 0.0;
    double pc = 0.0;
    double Q_mean = 0.0;
    double pc_phase = 0.0;
    double kinetic_phase = 0.0;   ///< <|grad S|^2 / 2m*>
    double potential_mean = 0.0;  ///< <hbar V0 + U>
    bool momentum_discrepancy = false;
};

/// `confining_potential` (erg, one value per point) may be empty.
EnergyDecomposition energy_decomposition(const ComplexField &psi, const EffectiveMassParams &params,
                                         std::span<const double> confining_potential = {});

enum class BohmRegime {
    Massless,   ///< dx/dt = c p/|p|, dp/dt = -grad Q
    Massive,    ///< dx/dt = p/m,     dp/dt = -grad Q
    Classical,  ///< dx/dt = p/m,     dp/dt = 0
};

enum class BohmStatus {
    Ok,
    EnteredMaskedRegion,
    UndefinedDirection,  ///< massless regime with p = 0
};

struct BohmState {
    double t = 0.0;
    std::array<double, kMaxDim> x{};  ///< cm
    std::array<double, kMaxDim> p{};  ///< g cm/s
};

struct BohmStepResult {
    BohmState state;
    BohmStatus status = BohmStatus::Ok;
};

/// grad Q at an off-grid point by tensor-product cubic Lagrange interpolation
/// of the spectral gradient. Returns false if the stencil touches a masked point.
bool interpolate_grad_q(const QuantumPotentialField &qf, std::span<const double> x,
                        std::array<double, kMaxDim> &grad);

/// One classical RK4 step. The mass for the massive and classical regimes is
/// `qf.m_star`.
BohmStepResult bohm_step(const BohmState &state, const QuantumPotentialField &qf, double dt,
                         BohmRegime regime);

struct BohmTrajectory {
    BohmRegime regime;
    std::vector<BohmState> states;
    BohmStatus status = BohmStatus::Ok;
};

BohmTrajectory integrate_trajectory(const BohmState &start, const QuantumPotentialField &qf,
                                    double dt, std::size_t steps, BohmRegime regime);

/// Exact zero-point energy of a 1D box of length a in mode n: n pi hbar c / a.
double box_zero_point_energy(int n, double a);

}  // namespace gwf
