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

#include <cmath>
#include <numbers>

#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"
#include "gwfield/madelung.hpp"
#include "gwfield/wavemech.hpp"

namespace {

using gwf::cplx;
constexpr double kPi = std::numbers::pi;

double max_abs_diff(const gwf::ComplexField &a, const gwf::ComplexField &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

TEST(EffectiveMass, DerivedQuantities) {
    const auto &k = gwf::cgs();
    const double w = 3.7e11;
    const auto p = gwf::EffectiveMassParams::from_reference_frequency(w, 2.5);
    EXPECT_NEAR(p.m_star / (k.hbar * w / (2 * k.c * k.c)), 1.0, 1e-12);
    EXPECT_NEAR(p.m_star / (k.hbar * p.k0 / (2 * k.c)), 1.0, 1e-12);
    EXPECT_NEAR(p.V0 / (2.5 * 2.5 * k.c / p.k0), 1.0, 1e-12);
    EXPECT_EQ(gwf::EffectiveMassParams::from_reference_frequency(w).V0, 0.0);
    EXPECT_THROW(gwf::EffectiveMassParams::from_reference_frequency(0.0), gwf::Error);
    EXPECT_THROW(gwf::EffectiveMassParams::from_reference_frequency(1.0, -1.0), gwf::Error);
}

TEST(Schrodinger, ZeroTimeIsIdentity) {
    const auto g = gwf::Grid::line(64, 1.0);
    const auto psi = gwf::make_gaussian_packet({{0.5}, 0.05, {2 * kPi * 3}}, g);
    const auto p = gwf::EffectiveMassParams::from_reference_frequency(1e12);
    EXPECT_LT(max_abs_diff(gwf::evolve_schrodinger(psi, p, 0.0), psi), 1e-14);
    EXPECT_THROW(gwf::evolve_schrodinger(psi, p, -1.0), gwf::Error);
}

TEST(Schrodinger, SelfConsistentPlaneWavePhase) {
    const double L = 1.0;
    const auto g = gwf::Grid::line(64, L);
    const double k = 2 * kPi * 4 / L;
    const auto spec = gwf::PlaneWaveSpec::on_shell(1.0, {k});
    const double w = spec.omega();
    const auto p = gwf::EffectiveMassParams::from_reference_frequency(w);
    const auto psi0 = gwf::make_plane_wave(spec, g, 0.0);
    for (double frac : {0.1, 0.37, 1.0}) {
        const double t = frac * 2 * kPi / w;
        const auto psi = gwf::evolve_schrodinger(psi0, p, t);
        EXPECT_LT(max_abs_diff(psi, gwf::make_plane_wave(spec, g, t)), 1e-10) << frac;
        if (frac == 1.0) {
            EXPECT_LT(max_abs_diff(psi, psi0), 1e-10);
        }
    }
}

TEST(Schrodinger, GaussianWidthFollowsFreeLaw) {
    const double L = 1.0;
    const auto g = gwf::Grid::line(4096, L);
    const double sigma0 = L / 64;
    const auto p = gwf::EffectiveMassParams::from_reference_frequency(gwf::cgs().c * 2 * kPi * 100);
    const double t_spread = 2 * p.m_star * sigma0 * sigma0 / gwf::cgs().hbar;
    const auto psi0 = gwf::make_gaussian_packet({{0.3}, sigma0, {2 * kPi * 20}}, g);
    EXPECT_NEAR(gwf::packet_width(psi0) / sigma0, 1.0, 1e-9);
    for (double r : {0.5, 1.0, 2.0, 4.0}) {
        const auto psi = gwf::evolve_schrodinger(psi0, p, r * t_spread);
        const double expected = gwf::free_gaussian_width(sigma0, p, r * t_spread);
        ASSERT_LT(4 * expected, L / 2);
        EXPECT_NEAR(gwf::packet_width(psi) / expected, 1.0, 1e-2) << r;
        EXPECT_NEAR(psi.norm_squared() / psi0.norm_squared(), 1.0, 1e-10);
    }
}

TEST(Schrodinger, UnitaryAndGroupProperty) {
    const gwf::Grid g({64, 64}, {1.0, 1.0});
    const auto psi = gwf::make_gaussian_packet({{0.4, 0.6}, 0.05, {2 * kPi * 2, -2 * kPi}}, g);
    const auto p = gwf::EffectiveMassParams::from_reference_frequency(5e11, 3.0);
    const double t1 = 3.1e-12;
    const double t2 = 7.3e-12;
    const auto a = gwf::evolve_schrodinger(psi, p, t1 + t2);
    const auto b = gwf::evolve_schrodinger(gwf::evolve_schrodinger(psi, p, t1), p, t2);
    EXPECT_LT(max_abs_diff(a, b), 1e-10);
    EXPECT_NEAR(a.norm_squared() / psi.norm_squared(), 1.0, 1e-10);
}

TEST(Schrodinger, NonrelativisticLimitPhase) {
    const double L = 1.0;
    const auto &c = gwf::cgs();
    const auto g = gwf::Grid::line(64, L);
    const double k = 2 * kPi / L;
    const double mu = 100 * k;
    const auto spec = gwf::PlaneWaveSpec::on_shell(1.0, {k}, mu);
    const auto p = gwf::EffectiveMassParams::from_reference_frequency(spec.omega(), mu);
    const double m0 = c.hbar * mu / c.c;
    const double w_nr = mu * c.c + c.hbar * k * k / (2 * m0);
    EXPECT_NEAR(p.mode_frequency(k * k) / w_nr, 1.0, 1e-6);
    const double t = 0.3 / w_nr;
    const auto psi = gwf::evolve_schrodinger(gwf::make_plane_wave(spec, g, 0.0), p, t);
    EXPECT_NEAR(std::arg(psi[0]) / (-w_nr * t), 1.0, 1e-6);
}

TEST(ClassicalWave, OneWayPacketTranslatesAtC) {
    const double L = 1.0;
    const auto g = gwf::Grid::line(256, L);
    const auto psi0 = gwf::make_gaussian_packet({{0.3}, L / 32, {2 * kPi * 6}}, g);
    const auto state = gwf::one_way_state(psi0);
    const double c = gwf::cgs().c;
    const auto s1 = gwf::evolve_classical_wave(state, 0.0, 0.25 * L / c);
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_LT(std::abs(s1.psi[(i + 64) % 256] - psi0[i]), 1e-8);
    }
    const double shift = 0.137 * L;
    const auto s2 = gwf::evolve_classical_wave(state, 0.0, shift / c);
    const auto ref = gwf::make_gaussian_packet({{0.3 + shift}, L / 32, {2 * kPi * 6}}, g);
    EXPECT_LT(max_abs_diff(s2.psi, ref), 1e-8);
}

TEST(ClassicalWave, StandingWaveHalfPeriod) {
    const double L = 1.0;
    const auto g = gwf::Grid::line(64, L);
    const double k = 2 * kPi * 3 / L;
    const auto cosine =
        gwf::ComplexField::sample(g, [&](std::span<const double> x) { return std::cos(k * x[0]); });
    const gwf::ClassicalWaveState s(cosine, cosine.scaled(0.0));
    const double w = gwf::cgs().c * k;
    const auto out = gwf::evolve_classical_wave(s, 0.0, kPi / w);
    EXPECT_LT(max_abs_diff(out.psi, cosine.scaled(-1.0)), 1e-12);
}

TEST(ClassicalWave, ZeroModeEvolvesLinearly) {
    const auto g = gwf::Grid::line(16, 1.0);
    const gwf::ComplexField one(g, std::vector<cplx>(16, 1.0));
    const gwf::ClassicalWaveState s(one, one.scaled(2.0));
    const auto out = gwf::evolve_classical_wave(s, 0.0, 0.75);
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_NEAR(std::abs(out.psi[i] - cplx(2.5, 0.0)), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(out.psi_dot[i] - cplx(2.0, 0.0)), 0.0, 1e-14);
    }
}

TEST(ClassicalWave, EnergyConservedOverManySteps) {
    const gwf::Grid g({64, 64}, {1.0, 0.5});
    const auto psi = gwf::make_gaussian_packet({{0.5, 0.2}, 0.06, {2 * kPi * 2, 0.0}}, g);
    const auto dot = gwf::make_gaussian_packet({{0.4, 0.25}, 0.05, {0.0, 2 * kPi * 4}}, g)
                         .scaled(cplx(3e10, 1e10));
    const double mu = 7.0;
    gwf::ClassicalWaveState s(psi, dot);
    const double e0 = gwf::wave_energy(s, mu);
    const double dt = 0.0137 / gwf::cgs().c;
    for (int i = 0; i < 1000; ++i) {
        s = gwf::evolve_classical_wave(s, mu, dt);
    }
    EXPECT_NEAR(gwf::wave_energy(s, mu) / e0, 1.0, 1e-9);
}

TEST(ClassicalWave, GridMismatchRejected) {
    const auto a = gwf::ComplexField(gwf::Grid::line(8, 1.0), std::vector<cplx>(8, 1.0));
    const auto b = gwf::ComplexField(gwf::Grid::line(16, 1.0), std::vector<cplx>(16, 1.0));
    EXPECT_THROW(gwf::ClassicalWaveState(a, b), gwf::Error);
}

TEST(Helmholtz, PlaneWaveResiduals) {
    const double L = 1.0;
    const gwf::Grid g({32, 32}, {L, L});
    const double kx = 2 * kPi * 3 / L;
    const double ky = 2 * kPi * 4 / L;
    const double k = std::hypot(kx, ky);
    const auto psi = gwf::make_plane_wave(gwf::PlaneWaveSpec::on_shell(1.0, {kx, ky}), g, 0.0);
    EXPECT_LT(gwf::helmholtz_residual(psi, k), 1e-10);
    EXPECT_NEAR(gwf::helmholtz_residual(psi, 2 * k) / (3 * k * k), 1.0, 1e-9);
}

TEST(Helmholtz, GaussianPacketHasSpectralSpread) {
    const double L = 1.0;
    const auto g = gwf::Grid::line(512, L);
    for (double sk : {1.0, 3.0, 5.0}) {
        const double sigma = L / 20;
        const double k = sk / sigma;
        const auto psi = gwf::make_gaussian_packet({{0.5}, sigma, {k}}, g);
        EXPECT_GT(gwf::helmholtz_residual(psi, k), 0.01 * k * k) << sk;
    }
}

TEST(Helmholtz, NullFieldRejected) {
    const auto g = gwf::Grid::line(8, 1.0);
    EXPECT_THROW(gwf::helmholtz_residual(gwf::ComplexField(g, std::vector<cplx>(8)), 1.0),
                 gwf::Error);
}

TEST(Dispersion, PlaneWaveOnShellAndOffset) {
    const double L = 1.0;
    const auto g = gwf::Grid::line(64, L);
    const double k = 2 * kPi * 5 / L;
    const double mu = 2 * kPi * 2 / L;
    const auto spec = gwf::PlaneWaveSpec::on_shell(1.0, {k}, mu);
    const auto psi = gwf::make_plane_wave(spec, g, 0.0);
    const double c = gwf::cgs().c;
    EXPECT_LT(gwf::dispersion_defect(psi, spec.omega(), mu, k), 1e-8 * k * k);
    const double delta = 0.1 * k * k;
    const double w2 = spec.omega() * spec.omega() + delta * c * c;
    EXPECT_NEAR(gwf::dispersion_defect(psi, std::sqrt(w2), mu, k) / delta, 1.0, 1e-9);
}

TEST(Dispersion, GaussianMatchesClassicalityDefect) {
    const double L = 1.0;
    const auto g = gwf::Grid::line(256, L);
    const double k = 2 * kPi * 10 / L;
    const auto psi = gwf::make_gaussian_packet({{0.5}, L / 20, {k}}, g);
    const double w = gwf::cgs().c * k;
    const auto form = gwf::polar_decompose(psi);
    const auto p = gwf::EffectiveMassParams::from_reference_frequency(w);
    const auto qf = gwf::quantum_potential(form, p.m_star);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!form.masked[i]) {
            sum += qf.classicality_defect[i] * qf.classicality_defect[i];
        }
    }
    const double rms = std::sqrt(sum / static_cast<double>(form.unmasked_count()));
    EXPECT_NEAR(gwf::dispersion_defect(psi, w, 0.0, k) / rms, 1.0, 1e-10);
}

TEST(Dispersion, AllMaskedRejected) {
    const auto g = gwf::Grid::line(8, 1.0);
    EXPECT_THROW(gwf::dispersion_defect(gwf::ComplexField(g, std::vector<cplx>(8)), 1.0, 0.0, 1.0),
                 gwf::Error);
}

TEST(Packet, ParametersValidated) {
    const auto g = gwf::Grid::line(64, 1.0);
    EXPECT_THROW(gwf::make_gaussian_packet({{0.5}, 1.0 / 64, {0.0}}, g), gwf::Error);
    EXPECT_THROW(gwf::make_gaussian_packet({{0.5}, 0.2, {0.0}}, g), gwf::Error);
    EXPECT_THROW(gwf::make_gaussian_packet({{0.5, 0.5}, 0.05, {0.0}}, g), gwf::Error);
}

TEST(Packet, CenterHandlesSeam) {
    const auto g = gwf::Grid::line(256, 1.0);
    const auto psi = gwf::make_gaussian_packet({{0.98}, 0.04, {0.0}}, g);
    EXPECT_NEAR(gwf::packet_center(psi), 0.98, 1e-9);
    EXPECT_NEAR(gwf::packet_width(psi), 0.04, 1e-8);
}

}  // namespace
