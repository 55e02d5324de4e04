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
#include "gwfield/helicity.hpp"
#include "gwfield/wavemech.hpp"

namespace {

using gwf::cplx;
constexpr double kPi = std::numbers::pi;

// Snapshots of sum_m a_m phi_m(x) e^{-i w_m t} at t = n dt.
gwf::TimeSeriesField tone_series(const gwf::Grid &g, std::size_t m, double dt,
                                 const std::vector<cplx> &amps, const std::vector<double> &omegas,
                                 const std::vector<double> &ks) {
    std::vector<gwf::ComplexField> snaps;
    for (std::size_t n = 0; n < m; ++n) {
        const double t = static_cast<double>(n) * dt;
        snaps.push_back(gwf::ComplexField::sample(g, [&](std::span<const double> x) {
            cplx v{0.0, 0.0};
            for (std::size_t i = 0; i < amps.size(); ++i) {
                v += amps[i] * std::polar(1.0, ks[i] * x[0] - omegas[i] * t);
            }
            return v;
        }));
    }
    return gwf::TimeSeriesField(std::move(snaps), dt);
}

class HelicityTest : public ::testing::Test {
   protected:
    const double L = 1.0;
    const std::size_t M = 32;
    const double dt = 1e-12;
    gwf::Grid grid = gwf::Grid::line(32, L);
    double omega(int bin) const {
        return 2 * kPi * bin / (static_cast<double>(M) * dt);
    }
};

TEST_F(HelicityTest, PositiveFrequencyModeIsAllMinus) {
    const auto s = tone_series(grid, M, dt, {1.0}, {omega(3)}, {2 * kPi * 2});
    const auto w = gwf::partial_wave_split(s);
    EXPECT_LT(std::sqrt(w.power_plus), 1e-10);
    EXPECT_NEAR(w.power_minus, 1.0, 1e-12);
    EXPECT_LT(w.reconstruction_error, 1e-10);
}

TEST_F(HelicityTest, RealSignalSplitsEvenly) {
    std::vector<gwf::ComplexField> snaps;
    for (std::size_t n = 0; n < M; ++n) {
        const double t = static_cast<double>(n) * dt;
        snaps.push_back(gwf::ComplexField::sample(grid, [&](std::span<const double> x) {
            return cplx(std::cos(omega(5) * t) * std::sin(2 * kPi * x[0]), 0.0);
        }));
    }
    const gwf::TimeSeriesField s(std::move(snaps), dt);
    const auto w = gwf::partial_wave_split(s);
    EXPECT_NEAR(std::sqrt(w.power_plus) / std::sqrt(w.power_minus), 1.0, 1e-10);
    EXPECT_LT(w.reconstruction_error, 1e-10);
}

TEST_F(HelicityTest, TwoToneNormsFollowAmplitudes) {
    const cplx a{0.8, 0.3};
    const cplx b{-0.2, 0.5};
    const auto s = tone_series(grid, M, dt, {a, b}, {omega(4), -omega(7)}, {2 * kPi, 2 * kPi * 3});
    const auto w = gwf::partial_wave_split(s);
    EXPECT_NEAR(w.power_minus / w.power_plus, std::norm(a) / std::norm(b), 1e-10);
    EXPECT_EQ(w.common_period, M);
}

TEST_F(HelicityTest, SplitIsAProjection) {
    const auto s = tone_series(grid, M, dt, {1.0, 0.5}, {omega(2), -omega(6)}, {2 * kPi, 4 * kPi});
    const auto w = gwf::partial_wave_split(s);
    const auto again = gwf::partial_wave_split(w.plus);
    EXPECT_LT(std::sqrt(again.power_minus), 1e-10);
    EXPECT_NEAR(again.power_plus / w.power_plus, 1.0, 1e-10);
}

TEST_F(HelicityTest, NyquistContentRejected) {
    const auto s = tone_series(grid, M, dt, {1.0}, {omega(static_cast<int>(M / 2))}, {0.0});
    EXPECT_THROW(gwf::partial_wave_split(s), gwf::Error);
}

TEST_F(HelicityTest, TooFewSnapshotsRejected) {
    std::vector<gwf::ComplexField> snaps(4, gwf::ComplexField(grid, std::vector<cplx>(32, 1.0)));
    EXPECT_THROW(gwf::TimeSeriesField(snaps, dt), gwf::Error);
}

TEST_F(HelicityTest, CrossCurrentAveragesOut) {
    const auto s = tone_series(grid, M, dt, {1.0, 0.7}, {omega(2), -omega(4)},
                               {2 * kPi * 3, -2 * kPi * 1});
    const auto w = gwf::partial_wave_split(s);
    EXPECT_EQ(w.common_period, M / 2);
    EXPECT_LT(gwf::cross_current_average(w, s), 1e-8);
}

TEST(Current, Examples) {
    const auto &c = gwf::cgs();
    const double L = 1.0;
    const auto g = gwf::Grid::line(64, L);
    const double k = 2 * kPi * 3 / L;
    const auto real_field =
        gwf::ComplexField::sample(g, [&](std::span<const double> x) { return std::sin(k * x[0]); });
    const auto real_cur = gwf::convection_current(real_field, k);
    for (double v : real_cur.j[0]) {
        EXPECT_NEAR(v / (c.hbar * k), 0.0, 1e-12);
    }
    const auto plane = gwf::make_plane_wave(gwf::PlaneWaveSpec::on_shell(1.0, {k}), g, 0.0);
    const auto cur = gwf::convection_current(plane, k);
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_NEAR(cur.j[0][i] / (c.hbar * k), 1.0, 1e-10);
        EXPECT_NEAR(cur.rho_t[i] / (c.hbar * k), 1.0, 1e-12);
    }
    const auto standing = gwf::ComplexField::sample(g, [&](std::span<const double> x) {
        return std::polar(1.0, k * x[0]) + std::polar(1.0, -k * x[0]);
    });
    const auto standing_cur = gwf::convection_current(standing, k);
    for (double v : standing_cur.j[0]) {
        EXPECT_NEAR(v / (c.hbar * k), 0.0, 1e-10);
    }
}

TEST(Continuity, StationaryModeSeries) {
    const double L = 1.0;
    const auto g = gwf::Grid::line(64, L);
    const double k = 2 * kPi * 3 / L;
    const auto spec = gwf::PlaneWaveSpec::on_shell(1.0, {k});
    const auto p = gwf::EffectiveMassParams::from_reference_frequency(spec.omega());
    const auto psi0 = gwf::make_plane_wave(spec, g, 0.0);
    std::vector<gwf::ComplexField> snaps;
    const double dt = 0.25 / spec.omega();
    for (int n = 0; n < 8; ++n) {
        snaps.push_back(gwf::evolve_schrodinger(psi0, p, n * dt));
    }
    EXPECT_LT(gwf::current_continuity(gwf::TimeSeriesField(snaps, dt), p.k0), 1e-10);
}

class MovingPacket : public ::testing::Test {
   protected:
    const double L = 1.0;
    gwf::Grid grid = gwf::Grid::line(1024, L);
    double sigma0 = L / 40;
    gwf::EffectiveMassParams params =
        gwf::EffectiveMassParams::from_reference_frequency(gwf::cgs().c * 2 * kPi * 100);
    double k_carrier = 2 * kPi * 15;
    gwf::ComplexField psi0 = gwf::make_gaussian_packet({{0.4}, sigma0, {k_carrier}}, grid);
    double t_spread() const {
        return 2 * params.m_star * sigma0 * sigma0 / gwf::cgs().hbar;
    }
};

TEST_F(MovingPacket, SchrodingerSeriesSatisfiesContinuity) {
    const double dt = 1e-4 * t_spread();
    std::vector<gwf::ComplexField> snaps;
    for (int n = 0; n < 8; ++n) {
        snaps.push_back(gwf::evolve_schrodinger(psi0, params, 0.3 * t_spread() + n * dt));
    }
    EXPECT_LT(gwf::current_continuity(gwf::TimeSeriesField(snaps, dt), params.k0), 1e-3);
}

TEST_F(MovingPacket, ClassicalWaveSeriesViolatesContinuity) {
    const auto state = gwf::one_way_state(psi0);
    const double dt = 1e-4 * t_spread();
    std::vector<gwf::ComplexField> snaps;
    for (int n = 0; n < 8; ++n) {
        snaps.push_back(gwf::evolve_classical_wave(state, 0.0, n * dt).psi);
    }
    EXPECT_GT(gwf::current_continuity(gwf::TimeSeriesField(snaps, dt), k_carrier), 1e-2);
}

TEST(WaveCharge, PositiveForPureModeNegativeForMixedSigns) {
    const auto &c = gwf::cgs();
    const double L = 1.0;
    const auto g = gwf::Grid::line(64, L);
    const double k1 = 2 * kPi * 2 / L;
    const double k2 = 2 * kPi * 5 / L;
    const double w1 = c.c * k1;
    const double w2 = c.c * k2;
    const auto pure = gwf::make_plane_wave(gwf::PlaneWaveSpec::on_shell(1.0, {k1}), g, 0.0);
    const auto q_pure = gwf::wave_equation_charge(pure, pure.scaled({0.0, -w1}));
    for (double q : q_pure) {
        EXPECT_NEAR(q / (c.hbar * k1), 1.0, 1e-12);
    }
    // a e^{i(k1 x - w1 t)} + b e^{i(k2 x + w2 t)} at t = 0 with |b| > |a|.
    const double a = 0.4;
    const double b = 1.0;
    const auto psi = gwf::ComplexField::sample(g, [&](std::span<const double> x) {
        return a * std::polar(1.0, k1 * x[0]) + b * std::polar(1.0, k2 * x[0]);
    });
    const auto psi_dot = gwf::ComplexField::sample(g, [&](std::span<const double> x) {
        return cplx(0.0, -w1) * a * std::polar(1.0, k1 * x[0]) +
               cplx(0.0, w2) * b * std::polar(1.0, k2 * x[0]);
    });
    const auto q = gwf::wave_equation_charge(psi, psi_dot);
    EXPECT_LT(*std::min_element(q.begin(), q.end()), 0.0);
    const auto cur = gwf::convection_current(psi, k1);
    EXPECT_GE(*std::min_element(cur.rho_t.begin(), cur.rho_t.end()), 0.0);
}

}  // namespace
