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

// Exact spectral propagators for the complex wave equation and the
// Schrodinger-like equation with effective mass, plus Helmholtz and
// dispersion diagnostics.

#include <vector>

#include "gwfield/field.hpp"

namespace gwf {

/// Effective-mass parameters of the Schrodinger-like equation
///   i dpsi/dt = [-(hbar / 2 m*) lap + V0] psi.
/// k0 = omega_ref / c, m* = hbar k0 / 2c = hbar omega_ref / 2c^2, and
/// V0 = mu^2 c / k0 is stored as an angular frequency (rad/s).
struct EffectiveMassParams {
    double omega_ref;  ///< rad/s
    double mu;         ///< 1/cm
    double k0;         ///< rad/cm
    double m_star;     ///< g
    double V0;         ///< rad/s

    static EffectiveMassParams from_reference_frequency(double omega_ref, double mu = 0.0);

    /// Angular frequency of spatial mode |k|^2 = k2: c (k2 + mu^2) / k0.
    double mode_frequency(double k2) const;
};

struct ClassicalWaveState {
    ComplexField psi;
    ComplexField psi_dot;  ///< time derivative, 1/s relative to psi

    /// Throws unless both fields share a grid.
    ClassicalWaveState(ComplexField psi_in, ComplexField psi_dot_in);
};

/// psi = A exp(-|x - center|^2 / 4 sigma0^2) exp(i k.(x - center)), with the
/// displacement taken as the nearest periodic image. sigma0 is the standard
/// deviation of |psi|^2 along each axis.
struct GaussianPacketSpec {
    std::vector<double> center;     ///< cm
    double sigma0;                  ///< cm
    std::vector<double> k_carrier;  ///< rad/cm
    cplx amplitude{1.0, 0.0};
};

/// Requires 2 dx < sigma0 < L/8 on every axis.
ComplexField make_gaussian_packet(const GaussianPacketSpec &spec, const Grid &grid);

/// Each Fourier mode is multiplied by exp(-i [c k^2/k0 + V0] t). Exact for any t.
ComplexField evolve_schrodinger(const ComplexField &psi, const EffectiveMassParams &params,
                                double t);

/// Exact per-mode solution of (lap - c^-2 d_t^2 - mu^2) psi = 0 with
/// omega_k = c sqrt(k^2 + mu^2). The k = 0, mu = 0 mode advances linearly.
ClassicalWaveState evolve_classical_wave(const ClassicalWaveState &state, double mu, double t);

/// Initial data for a packet moving at +c along `axis`: psi_dot = -c d psi/dx.
ClassicalWaveState one_way_state(const ComplexField &psi, int axis = 0);

/// Integral of c^-2 |psi_dot|^2 + |grad psi|^2 + mu^2 |psi|^2, evaluated
/// spectrally (Nyquist modes included with their k^2).
double wave_energy(const ClassicalWaveState &state, double mu);

/// hbar * sum_k omega_k |c_k|^2 / sum |c_k|^2 for the Schrodinger-like Hamiltonian.
double schrodinger_energy(const ComplexField &psi, const EffectiveMassParams &params);

/// ||(lap + k^2) psi|| / ||psi||, computed spectrally. Throws on the null field.
double helmholtz_residual(const ComplexField &psi, double k);

/// Volume RMS of k^2 - omega^2/c^2 + mu^2 - lap(sqrt rho)/sqrt rho over points
/// with rho above the shared density floor.
double dispersion_defect(const ComplexField &psi, double omega, double mu, double k);

/// Density-weighted centre along `axis` using the circular mean, so packets
/// straddling the seam are handled.
double packet_center(const ComplexField &psi, int axis = 0);
/// RMS width of |psi|^2 along `axis` about `packet_center`, nearest-image distances.
double packet_width(const ComplexField &psi, int axis = 0);

/// Closed-form width of a free Gaussian: sigma0 sqrt(1 + (hbar t / 2 m* sigma0^2)^2).
double free_gaussian_width(double sigma0, const EffectiveMassParams &params, double t);

}  // namespace gwf
