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


#include "gwfield/cmbrvac.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"
#include "gwfield/madelung.hpp"
#include "gwfield/spectral.hpp"

namespace gwf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadratureTolerance = 1e-10;

void require_positive(double v, const char *what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        fail_argument(std::string(what) + " must be positive and finite");
    }
}

double asymptotic_density(double omega_c, double T) {
    const auto &k = cgs();
    return k.hbar * k.hbar * std::pow(omega_c, 5) / (5.0 * kPi * kPi * std::pow(k.c, 3) * k.k_B * T);
}

}  // namespace

VacuumModel VacuumModel::create(double T, double omega_c, double xi, double V_over_B) {
    require_positive(T, "T");
    require_positive(omega_c, "omega_c");
    require_positive(V_over_B, "V_over_B");
    if (!(xi > 0.0 && xi <= 1.0)) {
        fail_argument("xi must lie in (0, 1]");
    }
    return VacuumModel(T, omega_c, xi, V_over_B);
}

double VacuumModel::cutoff_ratio() const {
    return cgs().hbar * omega_c_ / (cgs().k_B * T_);
}

double vacuum_energy(const VacuumModel &model, VacuumMethod method) {
    if (method == VacuumMethod::Asymptotic) {
        return asymptotic_density(model.omega_c(), model.T());
    }
    const auto &k = cgs();
    const double xc = model.cutoff_ratio();
    // omega = omega_c u on [0, 1].
    auto f = [xc](double u) { return u * u * u * -std::expm1(-xc * u); };
    double error = 0.0;
    double l1 = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, 1.0, 20, kQuadratureTolerance, &error, &l1);
    if (!(integral > 0.0) || !(error <= kQuadratureTolerance * integral)) {
        std::ostringstream ctx;
        ctx << "estimate=" << integral << " error=" << error;
        fail_numerical("vacuum-energy quadrature did not converge", ctx.str());
    }
    return k.hbar * std::pow(model.omega_c(), 4) / (kPi * kPi * std::pow(k.c, 3)) * integral;
}

double anomalous_moment(const VacuumModel &model, MomentPath path) {
    if (path == MomentPath::Numeric) {
        return model.xi() * kNumericVacuumPrefactor * std::pow(model.omega_c(), 5) *
               model.V_over_B() / kNumericBohrMagneton;
    }
    return model.xi() * vacuum_energy(model, VacuumMethod::Asymptotic) * model.V_over_B() /
           cgs().mu_B;
}

double cutoff_for_moment(double a_e, MomentPath path, double T, double xi, double V_over_B) {
    require_positive(a_e, "a_e");
    // Validates T, xi and V/B with a placeholder cutoff.
    const auto probe = VacuumModel::create(T, 1.0, xi, V_over_B);
    double prefactor = 0.0;
    double magneton = 0.0;
    if (path == MomentPath::Numeric) {
        prefactor = kNumericVacuumPrefactor;
        magneton = kNumericBohrMagneton;
    } else {
        prefactor = asymptotic_density(1.0, probe.T());
        magneton = cgs().mu_B;
    }
    return std::pow(a_e * magneton / (probe.xi() * prefactor * probe.V_over_B()), 0.2);
}

double qed_vacuum_energy(double omega_c) {
    require_positive(omega_c, "omega_c");
    const auto &k = cgs();
    return k.hbar * std::pow(omega_c, 4) / (8.0 * kPi * kPi * std::pow(k.c, 3));
}

double casimir_coefficient(double T) {
    require_positive(T, "T");
    const auto &k = cgs();
    return k.hbar * k.hbar * kPi * kPi * kPi * k.c * k.c / (k.k_B * T);
}

double casimir_pressure(double a, double T) {
    require_positive(a, "a");
    return -casimir_coefficient(T) / std::pow(a, 6);
}

double casimir_separation(double pressure_magnitude, double T) {
    require_positive(pressure_magnitude, "pressure magnitude");
    return std::pow(casimir_coefficient(T) / pressure_magnitude, 1.0 / 6.0);
}

double casimir_derivative_consistency(double a, double T, double rel_step) {
    require_positive(rel_step, "rel_step");
    const double h = rel_step * a;
    auto rho = [T](double sep) {
        return vacuum_energy(VacuumModel::create(T, kPi * cgs().c / sep),
                             VacuumMethod::Asymptotic);
    };
    const double derivative = (rho(a + h) - rho(a - h)) / (2.0 * h);
    const double p = casimir_pressure(a, T);
    return std::abs(derivative / p - 1.0);
}

MagneticEnergyReport magnetic_energy_identity_check(const ComplexField &psi,
                                                    const EffectiveMassParams &params) {
    require_positive(params.m_star, "m_star");
    const Grid &grid = psi.grid();
    const double hbar = cgs().hbar;
    MagneticEnergyReport rep;

    const auto coeffs = spectral::coefficients(psi);
    const auto k2 = grid.k_squared();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        rep.gradient_energy += k2[i] * std::norm(coeffs[i]);
    }

    const MadelungForm form = polar_decompose(psi);
    const QuantumPotentialField qf = quantum_potential(form, params.m_star);
    const auto grad_phi = phase_gradient(psi, form.masked);
    const double weight = 2.0 * params.m_star / (hbar * hbar);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (form.masked[i]) {
            continue;
        }
        rep.potential_term += weight * qf.Q[i] * form.rho[i];
        double g2 = 0.0;
        for (const auto &axis : grad_phi) {
            g2 += axis[i] * axis[i];
        }
        rep.phase_term += g2 * form.rho[i];
    }
    rep.potential_term *= grid.cell_volume();
    rep.phase_term *= grid.cell_volume();
    if (!(rep.gradient_energy > 0.0)) {
        fail_argument("field has no gradient energy");
    }
    rep.residual =
        std::abs(rep.gradient_energy - rep.potential_term - rep.phase_term) / rep.gradient_energy;
    return rep;
}

}  // namespace gwf
