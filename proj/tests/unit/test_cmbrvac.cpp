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


#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "gwfield/cmbrvac.hpp"
#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"
#include "gwfield/spectral.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

// int_0^xc x^3 (1 - e^{-x}) dx: alternating series for small xc, incomplete gamma otherwise.
double reduced_integral(double xc) {
    if (xc < 0.5) {
        double sum = 0.0;
        double term = 1.0;  // xc^n / n!
        for (int n = 1; n < 40; ++n) {
            term *= xc / n;
            sum += (n % 2 == 1 ? 1.0 : -1.0) * term * std::pow(xc, 4) / (n + 4);
        }
        return sum;
    }
    return std::pow(xc, 4) / 4.0 - 6.0 * boost::math::gamma_p(4.0, xc);
}

double exact_oracle(double T, double omega_c) {
    const auto &k = gwf::cgs();
    const double kT = k.k_B * T;
    const double xc = k.hbar * omega_c / kT;
    return std::pow(kT, 4) / (std::pow(k.hbar, 3) * kPi * kPi * std::pow(k.c, 3)) * reduced_integral(xc);
}

double omega_for_ratio(double ratio, double T) {
    return ratio * gwf::cgs().k_B * T / gwf::cgs().hbar;
}

TEST(CmbrVac, ExactQuadratureMatchesClosedForm) {
    for (double T : {2.7, 300.0}) {
        for (double ratio : {1e-4, 0.01, 0.3, 1.0, 7.0, 40.0}) {
            const auto m = gwf::VacuumModel::create(T, omega_for_ratio(ratio, T));
            const double got = gwf::vacuum_energy(m, gwf::VacuumMethod::Exact);
            EXPECT_NEAR(got / exact_oracle(T, m.omega_c()), 1.0, 1e-10) << T << " " << ratio;
        }
    }
}

TEST(CmbrVac, AsymptoticAgreesAtSmallCutoff) {
    const auto m = gwf::VacuumModel::create(2.7, omega_for_ratio(0.01, 2.7));
    const double ex = gwf::vacuum_energy(m, gwf::VacuumMethod::Exact);
    const double as = gwf::vacuum_energy(m, gwf::VacuumMethod::Asymptotic);
    EXPECT_LT(std::abs(ex / as - 1.0), 0.005);
    EXPECT_LE(ex, as * (1.0 + 1e-10));
}

TEST(CmbrVac, SmallCutoffVanishes) {
    const auto m = gwf::VacuumModel::create(2.7, 1e-3);
    EXPECT_LT(gwf::vacuum_energy(m, gwf::VacuumMethod::Exact), 1e-80);
    EXPECT_LT(gwf::vacuum_energy(m, gwf::VacuumMethod::Asymptotic), 1e-80);
}

TEST(CmbrVac, CmbrOrderOfMagnitude) {
    const auto m = gwf::VacuumModel::create(2.7, 2.87e9);
    const double rho = gwf::vacuum_energy(m, gwf::VacuumMethod::Asymptotic);
    EXPECT_GT(rho, 1e-23 / 30.0);
    EXPECT_LT(rho, 1e-23 * 30.0);
}

TEST(CmbrVac, MonotoneInCutoffAndTemperature) {
    double prev = 0.0;
    for (double w = 1e8; w < 1e13; w *= 1.7) {
        const double e = gwf::vacuum_energy(gwf::VacuumModel::create(2.7, w), gwf::VacuumMethod::Exact);
        EXPECT_GT(e, prev);
        prev = e;
    }
    double prev_t = std::numeric_limits<double>::infinity();
    for (double T = 1.0; T < 1000.0; T *= 1.9) {
        const double e = gwf::vacuum_energy(gwf::VacuumModel::create(T, 2.87e9),
                                            gwf::VacuumMethod::Asymptotic);
        EXPECT_LT(e, prev_t);
        prev_t = e;
    }
}

TEST(CmbrVac, ExactNeverExceedsAsymptotic) {
    for (double ratio : {1e-3, 0.05, 0.1, 1.0, 10.0}) {
        const auto m = gwf::VacuumModel::create(2.7, omega_for_ratio(ratio, 2.7));
        EXPECT_LE(gwf::vacuum_energy(m, gwf::VacuumMethod::Exact),
                  gwf::vacuum_energy(m, gwf::VacuumMethod::Asymptotic) * (1.0 + 1e-10));
    }
}

TEST(CmbrVac, NumericMomentRoundTrip) {
    const double target = 0.0011614;
    const auto m = gwf::VacuumModel::create(2.7, 2.87e9);
    EXPECT_NEAR(gwf::anomalous_moment(m, gwf::MomentPath::Numeric) / target, 1.0, 0.01);
    const double alpha_over_2pi = gwf::cgs().alpha / (2.0 * kPi);
    EXPECT_NEAR(gwf::cutoff_for_moment(alpha_over_2pi, gwf::MomentPath::Numeric) / 2.87e9, 1.0, 0.01);
}

TEST(CmbrVac, SymbolicMomentAndPrefactorGap) {
    const auto m = gwf::VacuumModel::create(2.7, 2.87e9);
    const double sym = gwf::anomalous_moment(m, gwf::MomentPath::Symbolic);
    EXPECT_NEAR(sym, gwf::vacuum_energy(m, gwf::VacuumMethod::Asymptotic) / gwf::cgs().mu_B, 1e-18);
    const double symbolic_prefactor =
        gwf::vacuum_energy(m, gwf::VacuumMethod::Asymptotic) / std::pow(2.87e9, 5);
    EXPECT_NEAR(symbolic_prefactor, 2.2e-72, 0.1e-72);
    const double gap = gwf::kNumericVacuumPrefactor / symbolic_prefactor;
    EXPECT_GT(gap, 20.0);
    EXPECT_LT(gap, 30.0);
    const double w = gwf::cutoff_for_moment(sym, gwf::MomentPath::Symbolic);
    EXPECT_NEAR(w / 2.87e9, 1.0, 1e-12);
}

TEST(CmbrVac, MomentIsLinearInEfficiencyAndVolumeRatio) {
    for (auto path : {gwf::MomentPath::Symbolic, gwf::MomentPath::Numeric}) {
        const double base = gwf::anomalous_moment(gwf::VacuumModel::create(2.7, 2.87e9), path);
        EXPECT_DOUBLE_EQ(gwf::anomalous_moment(gwf::VacuumModel::create(2.7, 2.87e9, 0.5), path),
                         0.5 * base);
        EXPECT_NEAR(gwf::anomalous_moment(gwf::VacuumModel::create(2.7, 2.87e9, 1.0, 3.0), path),
                    3.0 * base, 1e-15 * base);
    }
}

TEST(CmbrVac, QedContrast) {
    const double rho = gwf::qed_vacuum_energy(gwf::cgs().omega_P);
    EXPECT_LT(std::abs(std::log10(rho) - 114.0), 2.0);
    const double decades = std::log10(rho / gwf::kObservedVacuumBound);
    EXPECT_GE(decades, 118.0);
    EXPECT_LT(std::abs(decades - 120.0), 2.0);
    EXPECT_NEAR(gwf::qed_vacuum_energy(2e20) / gwf::qed_vacuum_energy(1e20), 16.0, 1e-13);
}

TEST(CmbrVac, CasimirCoefficientAndLaw) {
    const double c = gwf::casimir_coefficient(2.7);
    EXPECT_LT(std::abs(c / gwf::kReferenceCasimirCoefficient - 1.0), 0.15);
    EXPECT_NEAR(c, 8.3e-17, 0.05e-17);
    EXPECT_LT(gwf::casimir_pressure(1e-4, 2.7), 0.0);
    EXPECT_NEAR(gwf::casimir_pressure(1e-4, 2.7) / gwf::casimir_pressure(2e-4, 2.7), 64.0, 1e-12);
}

TEST(CmbrVac, CasimirSeparationForGigaDyne) {
    const double a = gwf::casimir_separation(1e9, 2.7);
    EXPECT_NEAR(a, 6.6e-5, 0.15e-5);
    EXPECT_NEAR(std::abs(gwf::casimir_pressure(a, 2.7)) / 1e9, 1.0, 1e-12);
    // The reference separation 4e-5 cm gives an order of magnitude more.
    EXPECT_GT(std::abs(gwf::casimir_pressure(4e-5, 2.7)), 1e10);
}

TEST(CmbrVac, CasimirIsDerivativeOfVacuumEnergy) {
    for (double a : {1e-5, 6.6e-5, 1e-3, 0.1}) {
        EXPECT_LT(gwf::casimir_derivative_consistency(a, 2.7), 1e-6) << a;
    }
}

TEST(CmbrVac, InvalidModels) {
    EXPECT_THROW(gwf::VacuumModel::create(0.0, 1.0), gwf::Error);
    EXPECT_THROW(gwf::VacuumModel::create(2.7, -1.0), gwf::Error);
    EXPECT_THROW(gwf::VacuumModel::create(2.7, 1.0, 1.5), gwf::Error);
    EXPECT_THROW(gwf::VacuumModel::create(2.7, 1.0, 0.0), gwf::Error);
    EXPECT_THROW(gwf::casimir_pressure(0.0, 2.7), gwf::Error);
    EXPECT_THROW(gwf::qed_vacuum_energy(0.0), gwf::Error);
}

gwf::EffectiveMassParams params() {
    return gwf::EffectiveMassParams::from_reference_frequency(3e15);
}

TEST(CmbrVac, MagneticIdentityRealGaussian) {
    const auto g = gwf::Grid::line(256, 10.0);
    const auto psi = gwf::ComplexField::sample(g, [](std::span<const double> x) {
        const double d = x[0] - 5.0;
        return gwf::cplx{std::exp(-d * d / 2.0), 0.0};
    });
    const auto rep = gwf::magnetic_energy_identity_check(psi, params());
    EXPECT_LT(rep.residual, 1e-9);
    EXPECT_LT(rep.phase_term, 1e-12 * rep.gradient_energy);
}

TEST(CmbrVac, MagneticIdentityPlaneWave) {
    const double L = 2.0;
    const auto g = gwf::Grid::line(64, L);
    const double k = 2.0 * kPi * 3.0 / L;
    const auto psi = gwf::ComplexField::sample(
        g, [k](std::span<const double> x) { return std::polar(1.0, k * x[0]); });
    const auto rep = gwf::magnetic_energy_identity_check(psi, params());
    const double norm = L;
    EXPECT_NEAR(rep.gradient_energy / (k * k * norm), 1.0, 1e-12);
    EXPECT_NEAR(rep.phase_term / (k * k * norm), 1.0, 1e-12);
    EXPECT_LT(std::abs(rep.potential_term), 1e-10 * k * k * norm);
}

TEST(CmbrVac, MagneticIdentityRandomBandLimited) {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double L = 3.0;
    const auto g = gwf::Grid::line(256, L);
    std::vector<std::pair<int, gwf::cplx>> modes;
    for (int m = -6; m <= 6; ++m) {
        modes.emplace_back(m, gwf::cplx{gauss(rng), gauss(rng)} * 0.15);
    }
    const auto psi = gwf::ComplexField::sample(g, [&](std::span<const double> x) {
        gwf::cplx v{2.0, 0.5};
        for (const auto &[m, a] : modes) {
            v += a * std::polar(1.0, 2.0 * kPi * m * x[0] / L);
        }
        return v;
    });
    const auto rep = gwf::magnetic_energy_identity_check(psi, params());
    EXPECT_LT(rep.residual, 1e-8);

    // Independent route for the potential term: int |grad sqrt(rho)|^2 from sampled sqrt(rho).
    std::vector<double> amp(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        amp[i] = std::abs(psi[i]);
    }
    const auto d_amp = gwf::spectral::derivative(g, std::span<const double>(amp), 0);
    double direct = 0.0;
    for (double v : d_amp) {
        direct += v * v;
    }
    direct *= g.cell_volume();
    EXPECT_NEAR(rep.potential_term / direct, 1.0, 1e-8);
}

}  // namespace
