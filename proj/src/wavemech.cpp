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

#include "gwfield/wavemech.hpp"

#include <cmath>
#include <numbers>

#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"
#include "gwfield/kernels.hpp"
#include "gwfield/madelung.hpp"
#include "gwfield/spectral.hpp"

namespace gwf {

EffectiveMassParams EffectiveMassParams::from_reference_frequency(double omega_ref, double mu) {
    if (!(omega_ref > 0.0) || !std::isfinite(omega_ref)) {
        fail_argument("omega_ref must be positive and finite");
    }
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        fail_argument("mu must be non-negative and finite");
    }
    const auto &k = cgs();
    EffectiveMassParams p{};
    p.omega_ref = omega_ref;
    p.mu = mu;
    p.k0 = omega_ref / k.c;
    p.m_star = k.hbar * omega_ref / (2.0 * k.c * k.c);
    p.V0 = mu * mu * k.c / p.k0;
    return p;
}

double EffectiveMassParams::mode_frequency(double k2) const {
    return cgs().c * (k2 + mu * mu) / k0;
}

ClassicalWaveState::ClassicalWaveState(ComplexField psi_in, ComplexField psi_dot_in)
    : psi(std::move(psi_in)), psi_dot(std::move(psi_dot_in)) {
    if (psi.grid() != psi_dot.grid()) {
        fail_argument("psi and psi_dot must share a grid");
    }
}

namespace {

// Signed distance from `c` to `x` on a circle of circumference `len`, in [-len/2, len/2).
double nearest_image(double x, double c, double len) {
    double d = std::fmod(x - c, len);
    if (d < -0.5 * len) {
        d += len;
    } else if (d >= 0.5 * len) {
        d -= len;
    }
    return d;
}

void check_axis(const Grid &grid, int axis) {
    if (axis < 0 || axis >= grid.dim()) {
        fail_argument("axis out of range");
    }
}

}  // namespace

ComplexField make_gaussian_packet(const GaussianPacketSpec &spec, const Grid &grid) {
    const int dim = grid.dim();
    if (static_cast<int>(spec.center.size()) != dim ||
        static_cast<int>(spec.k_carrier.size()) != dim) {
        fail_argument("packet center and carrier need one entry per grid axis");
    }
    for (int a = 0; a < dim; ++a) {
        if (!(spec.sigma0 > 2.0 * grid.spacing(a)) || !(spec.sigma0 < grid.length(a) / 8.0)) {
            fail_argument("sigma0 must satisfy 2 dx < sigma0 < L/8",
                          "axis " + std::to_string(a) + ": sigma0=" + std::to_string(spec.sigma0));
        }
    }
    const double inv4s2 = 1.0 / (4.0 * spec.sigma0 * spec.sigma0);
    return ComplexField::sample(grid, [&](std::span<const double> x) {
        double r2 = 0.0;
        double phase = 0.0;
        for (int a = 0; a < dim; ++a) {
            const double d = nearest_image(x[a], spec.center[a], grid.length(a));
            r2 += d * d;
            phase += spec.k_carrier[a] * d;
        }
        return spec.amplitude * std::exp(-r2 * inv4s2) * std::polar(1.0, phase);
    });
}

ComplexField evolve_schrodinger(const ComplexField &psi, const EffectiveMassParams &params,
                                double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        fail_argument("evolution time must be non-negative and finite");
    }
    const Grid &grid = psi.grid();
    const auto k2 = grid.k_squared();
    std::vector<cplx> mult(k2.size());
    for (std::size_t i = 0; i < k2.size(); ++i) {
        const double phase = std::fmod(params.mode_frequency(k2[i]) * t, 2.0 * std::numbers::pi);
        mult[i] = std::polar(1.0, -phase);
    }
    return ComplexField(grid, spectral::apply_multiplier(grid, psi.values(), mult));
}

ClassicalWaveState evolve_classical_wave(const ClassicalWaveState &state, double mu, double t) {
    if (!std::isfinite(t) || !(mu >= 0.0)) {
        fail_argument("evolution needs finite t and mu >= 0");
    }
    const Grid &grid = state.psi.grid();
    const double c = cgs().c;
    const auto k2 = grid.k_squared();
    const std::size_t n = k2.size();
    std::vector<double> a(n), b(n), cc(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double w = c * std::sqrt(k2[i] + mu * mu);
        if (w == 0.0) {
            a[i] = 1.0;
            b[i] = t;
            cc[i] = 0.0;
        } else {
            const double wt = w * t;
            a[i] = std::cos(wt);
            b[i] = std::sin(wt) / w;
            cc[i] = w * std::sin(wt);
        }
    }
    auto u = spectral::forward(grid, state.psi.values());
    auto v = spectral::forward(grid, state.psi_dot.values());
    kernels::rotate_pair(u, v, a, b, cc);
    return ClassicalWaveState(ComplexField(grid, spectral::inverse(grid, u)),
                              ComplexField(grid, spectral::inverse(grid, v)));
}

ClassicalWaveState one_way_state(const ComplexField &psi, int axis) {
    check_axis(psi.grid(), axis);
    auto d = spectral::derivative(psi.grid(), psi.values(), axis);
    kernels::scale(d, -cgs().c);
    return ClassicalWaveState(psi, ComplexField(psi.grid(), std::move(d)));
}

double wave_energy(const ClassicalWaveState &state, double mu) {
    const Grid &grid = state.psi.grid();
    const double c = cgs().c;
    const auto u = spectral::coefficients(state.psi);
    const auto v = spectral::coefficients(state.psi_dot);
    const auto k2 = grid.k_squared();
    double e = 0.0;
    for (std::size_t i = 0; i < k2.size(); ++i) {
        e += std::norm(v[i]) / (c * c) + (k2[i] + mu * mu) * std::norm(u[i]);
    }
    return e;
}

double schrodinger_energy(const ComplexField &psi, const EffectiveMassParams &params) {
    const auto coeff = spectral::coefficients(psi);
    const auto k2 = psi.grid().k_squared();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < k2.size(); ++i) {
        const double w = std::norm(coeff[i]);
        num += params.mode_frequency(k2[i]) * w;
        den += w;
    }
    if (den == 0.0) {
        fail_argument("energy of the null state is undefined");
    }
    return cgs().hbar * num / den;
}

double helmholtz_residual(const ComplexField &psi, double k) {
    const auto coeff = spectral::coefficients(psi);
    const auto k2 = psi.grid().k_squared();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < k2.size(); ++i) {
        const double w = std::norm(coeff[i]);
        const double r = k * k - k2[i];
        num += r * r * w;
        den += w;
    }
    if (den == 0.0) {
        fail_argument("Helmholtz residual of the null field is undefined");
    }
    return std::sqrt(num / den);
}

double dispersion_defect(const ComplexField &psi, double omega, double mu, double k) {
    const MadelungForm form = polar_decompose(psi);
    if (form.unmasked_count() == 0) {
        fail_argument("every point is below the density floor");
    }
    const double c = cgs().c;
    const double offset = k * k - omega * omega / (c * c) + mu * mu;
    const auto defect = classicality_defect(psi, form.masked);
    double sum = 0.0;
    for (std::size_t i = 0; i < defect.size(); ++i) {
        if (!form.masked[i]) {
            const double f = offset - defect[i];
            sum += f * f;
        }
    }
    return std::sqrt(sum / static_cast<double>(form.unmasked_count()));
}

namespace {

std::vector<double> marginal_density(const ComplexField &psi, int axis) {
    const Grid &grid = psi.grid();
    check_axis(grid, axis);
    std::vector<double> m(grid.n(axis), 0.0);
    const auto rho = psi.density();
    for (std::size_t flat = 0; flat < rho.size(); ++flat) {
        m[grid.unravel(flat)[axis]] += rho[flat];
    }
    return m;
}

double circular_center(const std::vector<double> &m, double len) {
    cplx z{0.0, 0.0};
    double total = 0.0;
    const double n = static_cast<double>(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        z += m[i] * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / n);
        total += m[i];
    }
    if (total == 0.0) {
        fail_argument("packet diagnostics of the null field are undefined");
    }
    if (std::abs(z) <= 1e-14 * total) {
        fail_numerical("packet has no well-defined centre on the periodic axis");
    }
    double theta = std::arg(z);
    if (theta < 0.0) {
        theta += 2.0 * std::numbers::pi;
    }
    return theta / (2.0 * std::numbers::pi) * len;
}

}  // namespace

double packet_center(const ComplexField &psi, int axis) {
    const auto m = marginal_density(psi, axis);
    return circular_center(m, psi.grid().length(axis));
}

double packet_width(const ComplexField &psi, int axis) {
    const auto m = marginal_density(psi, axis);
    const Grid &grid = psi.grid();
    const double len = grid.length(axis);
    const double c0 = circular_center(m, len);
    // Refine the centre with the nearest-image mean, then take the second moment.
    double total = 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        mean += m[i] * nearest_image(grid.coordinate(axis, i), c0, len);
        total += m[i];
    }
    const double c1 = c0 + mean / total;
    double var = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double d = nearest_image(grid.coordinate(axis, i), c1, len);
        var += m[i] * d * d;
    }
    return std::sqrt(var / total);
}

double free_gaussian_width(double sigma0, const EffectiveMassParams &params, double t) {
    const double r = cgs().hbar * t / (2.0 * params.m_star * sigma0 * sigma0);
    return sigma0 * std::sqrt(1.0 + r * r);
}

}  // namespace gwf
