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

#include "gwfield/madelung.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"
#include "gwfield/spectral.hpp"

namespace gwf {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_span(const Grid &grid, std::size_t n, const char *what) {
    if (n != grid.size()) {
        fail_argument(std::string(what) + " must have one value per grid point",
                      std::to_string(n) + " values for " + std::to_string(grid.size()) +
                          " points");
    }
}

// Walks one line of the grid along `axis` starting at `start`, making each
// unmasked phase the 2 pi image nearest to the previous unmasked one.
std::size_t unwrap_line(const Grid &grid, const std::vector<bool> &masked,
                        std::vector<double> &phase, std::array<std::size_t, kMaxDim> start,
                        int axis) {
    std::size_t breaks = 0;
    bool have_prev = false;
    bool gap = false;
    double prev = 0.0;
    for (std::size_t j = 0; j < grid.n(axis); ++j) {
        auto idx = start;
        idx[axis] = j;
        const std::size_t flat = grid.ravel(idx);
        if (masked[flat]) {
            gap = have_prev;
            continue;
        }
        if (have_prev) {
            phase[flat] += kTwoPi * std::round((prev - phase[flat]) / kTwoPi);
            if (gap) {
                ++breaks;
                gap = false;
            }
        }
        prev = phase[flat];
        have_prev = true;
    }
    return breaks;
}

}  // namespace

ComplexField MadelungForm::reconstruct() const {
    std::vector<cplx> v(rho.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = std::polar(std::sqrt(rho[i]), phase[i]);
    }
    return ComplexField(grid, std::move(v));
}

std::size_t MadelungForm::unmasked_count() const {
    return static_cast<std::size_t>(std::count(masked.begin(), masked.end(), false));
}

MadelungForm polar_decompose(const ComplexField &psi) {
    const Grid &grid = psi.grid();
    MadelungForm form{grid, psi.density(), std::vector<double>(grid.size(), 0.0),
                      std::vector<bool>(grid.size(), false)};
    const double rho_max = *std::max_element(form.rho.begin(), form.rho.end());
    form.rho_floor = kRhoFloorFraction * rho_max;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        form.masked[i] = !(form.rho[i] >= form.rho_floor) || form.rho[i] == 0.0;
        form.phase[i] = std::arg(psi[i]);
    }
    // Axis 0 through the origin, then axis 1 from every point of that line,
    // then axis 2 from every point of the resulting plane.
    std::size_t breaks = unwrap_line(grid, form.masked, form.phase, {0, 0, 0}, 0);
    if (grid.dim() >= 2) {
        for (std::size_t i0 = 0; i0 < grid.n(0); ++i0) {
            breaks += unwrap_line(grid, form.masked, form.phase, {i0, 0, 0}, 1);
        }
    }
    if (grid.dim() >= 3) {
        for (std::size_t i0 = 0; i0 < grid.n(0); ++i0) {
            for (std::size_t i1 = 0; i1 < grid.n(1); ++i1) {
                breaks += unwrap_line(grid, form.masked, form.phase, {i0, i1, 0}, 2);
            }
        }
    }
    form.unwrap_breaks = breaks;
    return form;
}

std::vector<double> classicality_defect(const ComplexField &psi, const std::vector<bool> &masked) {
    const Grid &grid = psi.grid();
    check_span(grid, masked.size(), "mask");
    const auto lap = spectral::laplacian(grid, psi.values());
    std::vector<double> out(grid.size(), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!masked[i]) {
            out[i] = (lap[i] / psi[i]).real();
        }
    }
    for (int a = 0; a < grid.dim(); ++a) {
        const auto g = spectral::derivative(grid, psi.values(), a);
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (!masked[i]) {
                const double w = (g[i] / psi[i]).imag();
                out[i] += w * w;
            }
        }
    }
    return out;
}

std::vector<std::vector<double>> phase_gradient(const ComplexField &psi,
                                                const std::vector<bool> &masked) {
    const Grid &grid = psi.grid();
    check_span(grid, masked.size(), "mask");
    std::vector<std::vector<double>> out;
    for (int a = 0; a < grid.dim(); ++a) {
        const auto g = spectral::derivative(grid, psi.values(), a);
        std::vector<double> comp(grid.size(), 0.0);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (!masked[i]) {
                comp[i] = (std::conj(psi[i]) * g[i]).imag() / std::norm(psi[i]);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

double QuantumPotentialField::weighted_mean(std::span<const double> rho) const {
    check_span(grid, rho.size(), "density");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!masked[i]) {
            num += rho[i] * Q[i];
            den += rho[i];
        }
    }
    if (den == 0.0) {
        fail_argument("weighted mean over an empty support");
    }
    return num / den;
}

QuantumPotentialField quantum_potential(const MadelungForm &form, double m_star) {
    if (!(m_star > 0.0)) {
        fail_argument("effective mass must be positive");
    }
    if (form.unmasked_count() == 0) {
        fail_argument("every point is below the density floor");
    }
    const Grid &grid = form.grid;
    const ComplexField psi = form.reconstruct();
    const double scale = -cgs().hbar * cgs().hbar / (2.0 * m_star);

    QuantumPotentialField qf{grid, {}, classicality_defect(psi, form.masked), {}, form.masked,
                             m_star};
    qf.Q.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        qf.Q[i] = scale * qf.classicality_defect[i];
    }

    // D = Re(L/psi) + sum_a Im(G_a/psi)^2 with G = grad psi, L = lap psi, so
    // d_b D = Re(d_b L/psi - L G_b/psi^2) + 2 sum_a Im(G_a/psi) Im(H_ab/psi - G_a G_b/psi^2).
    const int dim = grid.dim();
    const auto lap = spectral::laplacian(grid, psi.values());
    std::vector<std::vector<cplx>> g(dim);
    for (int a = 0; a < dim; ++a) {
        g[a] = spectral::derivative(grid, psi.values(), a);
    }
    for (int b = 0; b < dim; ++b) {
        const auto dlap = spectral::derivative(grid, lap, b);
        std::vector<std::vector<cplx>> h(dim);
        for (int a = 0; a < dim; ++a) {
            h[a] = spectral::derivative(grid, g[a], b);
        }
        std::vector<double> comp(grid.size(), 0.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (form.masked[i]) {
                continue;
            }
            const cplx inv = 1.0 / psi[i];
            double d = (dlap[i] * inv - lap[i] * g[b][i] * inv * inv).real();
            for (int a = 0; a < dim; ++a) {
                d += 2.0 * (g[a][i] * inv).imag() *
                     (h[a][i] * inv - g[a][i] * g[b][i] * inv * inv).imag();
            }
            comp[i] = scale * d;
        }
        qf.grad_Q.push_back(std::move(comp));
    }
    return qf;
}

double hj_residual(const MadelungForm &form, const EffectiveMassParams &params,
                   std::span<const double> dS_dt) {
    if (dS_dt.empty()) {
        fail_argument("hj_residual needs dS/dt");
    }
    check_span(form.grid, dS_dt.size(), "dS/dt");
    const double hbar = cgs().hbar;
    const ComplexField psi = form.reconstruct();
    const auto qf = quantum_potential(form, params.m_star);
    const auto grad = phase_gradient(psi, form.masked);
    double sum = 0.0;
    for (std::size_t i = 0; i < dS_dt.size(); ++i) {
        if (form.masked[i]) {
            continue;
        }
        double g2 = 0.0;
        for (const auto &comp : grad) {
            g2 += comp[i] * comp[i];
        }
        const double r = dS_dt[i] + hbar * hbar * g2 / (2.0 * params.m_star) +
                         hbar * params.V0 + qf.Q[i];
        sum += r * r;
    }
    return std::sqrt(sum / static_cast<double>(form.unmasked_count()));
}

double continuity_residual(const MadelungForm &form, const EffectiveMassParams &params,
                           std::span<const double> rho_dot) {
    const Grid &grid = form.grid;
    check_span(grid, rho_dot.size(), "d rho/dt");
    if (form.unmasked_count() == 0) {
        fail_argument("every point is below the density floor");
    }
    const double hbar = cgs().hbar;
    const ComplexField psi = form.reconstruct();
    // div(rho grad S / m*) = (hbar / m*) Im(conj(psi) lap psi)
    const auto lap = spectral::laplacian_denoised(grid, psi.values());
    const auto k2 = grid.k_squared();
    double sum = 0.0;
    double rho_dot_max = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rho_dot_max = std::max(rho_dot_max, std::abs(rho_dot[i]));
        if (form.masked[i]) {
            continue;
        }
        const double div = hbar / params.m_star * (std::conj(psi[i]) * lap[i]).imag();
        const double r = rho_dot[i] + div;
        sum += r * r;
    }
    const double rms = std::sqrt(sum / static_cast<double>(form.unmasked_count()));

    const auto coeff = spectral::coefficients(psi);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < k2.size(); ++i) {
        num += k2[i] * std::norm(coeff[i]);
        den += std::norm(coeff[i]);
    }
    double k_fund = 0.0;
    for (int a = 0; a < grid.dim(); ++a) {
        k_fund = std::max(k_fund, kTwoPi / grid.length(a));
    }
    const double rate = hbar * (num / den + k_fund * k_fund) / (2.0 * params.m_star);
    const double rho_max = *std::max_element(form.rho.begin(), form.rho.end());
    return rms / (rho_dot_max + 1e-4 * rho_max * rate);
}

EnergyDecomposition energy_decomposition(const ComplexField &psi, const EffectiveMassParams &params,
                                         std::span<const double> confining_potential) {
    const Grid &grid = psi.grid();
    if (!confining_potential.empty()) {
        check_span(grid, confining_potential.size(), "confining potential");
    }
    const auto &k = cgs();
    const MadelungForm form = polar_decompose(psi);
    const auto qf = quantum_potential(form, params.m_star);
    const ComplexField rec = form.reconstruct();
    const auto grad = phase_gradient(rec, form.masked);

    EnergyDecomposition out;
    double wsum = 0.0;
    double kin = 0.0;
    double pot = 0.0;
    double q = 0.0;
    double pphase = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (form.masked[i]) {
            continue;
        }
        const double w = form.rho[i];
        double g2 = 0.0;
        for (const auto &comp : grad) {
            g2 += comp[i] * comp[i];
        }
        wsum += w;
        kin += w * k.hbar * k.hbar * g2 / (2.0 * params.m_star);
        pot += w * (k.hbar * params.V0 +
                    (confining_potential.empty() ? 0.0 : confining_potential[i]));
        q += w * qf.Q[i];
        pphase += w * std::sqrt(g2);
    }
    out.kinetic_phase = kin / wsum;
    out.potential_mean = pot / wsum;
    out.Q_mean = q / wsum;
    out.pc_phase = k.hbar * k.c * pphase / wsum;
    out.E = out.kinetic_phase + out.Q_mean + out.potential_mean;

    const auto coeff = spectral::coefficients(psi);
    const auto k2 = grid.k_squared();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < k2.size(); ++i) {
        num += std::sqrt(k2[i]) * std::norm(coeff[i]);
        den += std::norm(coeff[i]);
    }
    out.pc = k.hbar * k.c * num / den;
    const double scale = std::max({out.pc, out.pc_phase, std::abs(out.E)});
    out.momentum_discrepancy = std::abs(out.pc - out.pc_phase) > 1e-6 * scale;
    return out;
}

namespace {

void lagrange_weights(double s, double w[4]) {
    // Nodes at -1, 0, 1, 2.
    w[0] = -s * (s - 1.0) * (s - 2.0) / 6.0;
    w[1] = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
    w[2] = -(s + 1.0) * s * (s - 2.0) / 2.0;
    w[3] = (s + 1.0) * s * (s - 1.0) / 6.0;
}

}  // namespace

bool interpolate_grad_q(const QuantumPotentialField &qf, std::span<const double> x,
                        std::array<double, kMaxDim> &grad) {
    const Grid &grid = qf.grid;
    const int dim = grid.dim();
    if (static_cast<int>(x.size()) < dim) {
        fail_argument("position needs one coordinate per grid axis");
    }
    std::array<std::array<std::size_t, 4>, kMaxDim> idx{};
    std::array<std::array<double, 4>, kMaxDim> w{};
    for (int a = 0; a < kMaxDim; ++a) {
        if (a >= dim) {
            idx[a] = {0, 0, 0, 0};
            w[a] = {1.0, 0.0, 0.0, 0.0};
            continue;
        }
        const double u = x[a] / grid.spacing(a);
        const double base = std::floor(u);
        lagrange_weights(u - base, w[a].data());
        const auto n = static_cast<long long>(grid.n(a));
        const auto b = static_cast<long long>(base);
        for (int j = 0; j < 4; ++j) {
            idx[a][j] = static_cast<std::size_t>(((b - 1 + j) % n + n) % n);
        }
    }
    grad.fill(0.0);
    const int span1 = dim >= 2 ? 4 : 1;
    const int span2 = dim >= 3 ? 4 : 1;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < span1; ++j) {
            for (int l = 0; l < span2; ++l) {
                const std::size_t flat = grid.ravel({idx[0][i], idx[1][j], idx[2][l]});
                if (qf.masked[flat]) {
                    return false;
                }
                const double ww = w[0][i] * w[1][j] * w[2][l];
                for (int a = 0; a < dim; ++a) {
                    grad[a] += ww * qf.grad_Q[a][flat];
                }
            }
        }
    }
    return true;
}

namespace {

struct Deriv {
    std::array<double, kMaxDim> dx{};
    std::array<double, kMaxDim> dp{};
};

BohmStatus evaluate(const QuantumPotentialField &qf, BohmRegime regime,
                    const std::array<double, kMaxDim> &x, const std::array<double, kMaxDim> &p,
                    Deriv &d) {
    const int dim = qf.grid.dim();
    const double c = cgs().c;
    if (regime == BohmRegime::Massless) {
        double pn = 0.0;
        for (int a = 0; a < dim; ++a) {
            pn += p[a] * p[a];
        }
        pn = std::sqrt(pn);
        if (pn == 0.0) {
            return BohmStatus::UndefinedDirection;
        }
        for (int a = 0; a < dim; ++a) {
            d.dx[a] = c * p[a] / pn;
        }
    } else {
        for (int a = 0; a < dim; ++a) {
            d.dx[a] = p[a] / qf.m_star;
        }
    }
    if (regime == BohmRegime::Classical) {
        d.dp.fill(0.0);
        return BohmStatus::Ok;
    }
    std::array<double, kMaxDim> g{};
    if (!interpolate_grad_q(qf, std::span<const double>(x.data(), dim), g)) {
        return BohmStatus::EnteredMaskedRegion;
    }
    for (int a = 0; a < dim; ++a) {
        d.dp[a] = -g[a];
    }
    return BohmStatus::Ok;
}

}  // namespace

BohmStepResult bohm_step(const BohmState &state, const QuantumPotentialField &qf, double dt,
                         BohmRegime regime) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        fail_argument("time step must be positive and finite");
    }
    const int dim = qf.grid.dim();
    Deriv k[4];
    std::array<double, kMaxDim> x = state.x;
    std::array<double, kMaxDim> p = state.p;
    const double frac[4] = {0.0, 0.5, 0.5, 1.0};
    for (int s = 0; s < 4; ++s) {
        if (s > 0) {
            for (int a = 0; a < dim; ++a) {
                x[a] = state.x[a] + frac[s] * dt * k[s - 1].dx[a];
                p[a] = state.p[a] + frac[s] * dt * k[s - 1].dp[a];
            }
        }
        const BohmStatus st = evaluate(qf, regime, x, p, k[s]);
        if (st != BohmStatus::Ok) {
            return {state, st};
        }
    }
    BohmState next = state;
    next.t = state.t + dt;
    for (int a = 0; a < dim; ++a) {
        next.x[a] += dt / 6.0 * (k[0].dx[a] + 2.0 * k[1].dx[a] + 2.0 * k[2].dx[a] + k[3].dx[a]);
        next.p[a] += dt / 6.0 * (k[0].dp[a] + 2.0 * k[1].dp[a] + 2.0 * k[2].dp[a] + k[3].dp[a]);
    }
    return {next, BohmStatus::Ok};
}

BohmTrajectory integrate_trajectory(const BohmState &start, const QuantumPotentialField &qf,
                                    double dt, std::size_t steps, BohmRegime regime) {
    BohmTrajectory traj{regime, {start}, BohmStatus::Ok};
    BohmState s = start;
    for (std::size_t i = 0; i < steps; ++i) {
        const auto r = bohm_step(s, qf, dt, regime);
        if (r.status != BohmStatus::Ok) {
            traj.status = r.status;
            break;
        }
        s = r.state;
        traj.states.push_back(s);
    }
    return traj;
}

double box_zero_point_energy(int n, double a) {
    if (n < 1 || !(a > 0.0)) {
        fail_argument("box mode needs n >= 1 and a > 0");
    }
    return static_cast<double>(n) * std::numbers::pi * cgs().hbar * cgs().c / a;
}

}  // namespace gwf
