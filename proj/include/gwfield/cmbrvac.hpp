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

// Thermal vacuum energy with a frequency cutoff, the anomalous-moment
// estimate built on it, the QED comparison, Casimir pressure, and the
// gradient-energy split of a complex field.

#include "gwfield/field.hpp"
#include "gwfield/wavemech.hpp"

namespace gwf {

/// Observational upper bound on the vacuum energy density, erg/cm^3.
inline constexpr double kObservedVacuumBound = 1e-6;
/// Numeric prefactor of the omega_c^5 vacuum-energy law at 2.7 K, erg s^5/cm^3.
inline constexpr double kNumericVacuumPrefactor = 5.5e-71;
/// Bohr magneton to four figures, erg/G, as used with kNumericVacuumPrefactor.
inline constexpr double kNumericBohrMagneton = 9.274e-21;
/// Reference Casimir coefficient at 2.7 K, dyne cm^4.
inline constexpr double kReferenceCasimirCoefficient = 7.5e-17;

class VacuumModel {
   public:
    /// T > 0, omega_c > 0, 0 < xi <= 1, V_over_B > 0.
    static VacuumModel create(double T, double omega_c, double xi = 1.0, double V_over_B = 1.0);

    double T() const {
        return T_;
    }
    double omega_c() const {
        return omega_c_;
    }
    double xi() const {
        return xi_;
    }
    double V_over_B() const {
        return v_over_b_;
    }
    /// hbar omega_c / kT
    double cutoff_ratio() const;

   private:
    VacuumModel(double T, double w, double xi, double vb) : T_(T), omega_c_(w), xi_(xi), v_over_b_(vb) {
    }
    double T_;
    double omega_c_;
    double xi_;
    double v_over_b_;
};

enum class VacuumMethod { Exact, Asymptotic };

/// Energy density of the empty-cell population below omega_c, erg/cm^3:
///   Exact:      int_0^omega_c (omega^2 / pi^2 c^3) hbar omega (1 - exp(-hbar omega / kT)) d omega
///               by adaptive Gauss-Kronrod quadrature to 1e-10 relative;
///   Asymptotic: hbar^2 omega_c^5 / (5 pi^2 c^3 kT).
double vacuum_energy(const VacuumModel &model, VacuumMethod method);

enum class MomentPath {
    Symbolic,  ///< xi rho_vac(asymptotic) (V/B) / mu_B
    Numeric,   ///< xi kNumericVacuumPrefactor omega_c^5 (V/B) / kNumericBohrMagneton
};

double anomalous_moment(const VacuumModel &model, MomentPath path);

/// omega_c that reproduces `a_e` along `path`, all other model fields held fixed.
double cutoff_for_moment(double a_e, MomentPath path, double T = 2.7, double xi = 1.0,
                         double V_over_B = 1.0);

/// hbar omega_c^4 / (8 pi^2 c^3), erg/cm^3.
double qed_vacuum_energy(double omega_c);

/// hbar^2 pi^3 c^2 / kT, dyne cm^4.
double casimir_coefficient(double T);

/// -casimir_coefficient(T) / a^6, dyne/cm^2.
double casimir_pressure(double a, double T);

/// Plate separation at which |P| equals `pressure_magnitude`.
double casimir_separation(double pressure_magnitude, double T);

/// Relative difference between casimir_pressure and the central-difference
/// a-derivative of the asymptotic vacuum energy at omega_c = pi c / a.
double casimir_derivative_consistency(double a, double T, double rel_step = 1e-5);

struct MagneticEnergyReport {
    double gradient_energy = 0.0;   ///< int |grad psi|^2 dV
    double potential_term = 0.0;    ///< int (2 m* / hbar^2) Q rho dV
    double phase_term = 0.0;        ///< int |grad phi|^2 rho dV
    double residual = 0.0;          ///< |lhs - rhs| / lhs
};

/// Checks int |grad psi|^2 = int (2 m*/hbar^2) Q rho + int |grad phi|^2 rho on the
/// periodic box. For massless fields 2 m*/hbar^2 = omega / (hbar c^2).
MagneticEnergyReport magnetic_energy_identity_check(const ComplexField &psi,
                                                    const EffectiveMassParams &params);

}  // namespace gwf
