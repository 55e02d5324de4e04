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

#include "gwfield/helicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"
#include "gwfield/spectral.hpp"

namespace gwf {

TimeSeriesField::TimeSeriesField(std::vector<ComplexField> snapshots, double dt)
    : snapshots_(std::move(snapshots)), dt_(dt) {
    if (snapshots_.size() < 8) {
        fail_argument("time series needs at least 8 snapshots",
                      std::to_string(snapshots_.size()) + " given");
    }
    if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
        fail_argument("snapshot spacing must be positive and finite");
    }
    for (const auto &s : snapshots_) {
        if (s.grid() != snapshots_.front().grid()) {
            fail_argument("snapshots must share a grid");
        }
    }
}

namespace {

// Signed bin index in (-M/2, M/2].
long signed_bin(std::size_t j, std::size_t m) {
    const auto sj = static_cast<long>(j);
    const auto sm = static_cast<long>(m);
    return 2 * sj > sm ? sj - sm : sj;
}

}  // namespace

PartialWaves partial_wave_split(const TimeSeriesField &series) {
    const Grid &grid = series.grid();
    const std::size_t m = series.size();
    const std::size_t n = grid.size();
    std::vector<std::vector<cplx>> plus(m, std::vector<cplx>(n));
    std::vector<std::vector<cplx>> minus(m, std::vector<cplx>(n));
    std::vector<double> bin_power(m, 0.0);
    std::vector<cplx> buf(m);
    std::vector<cplx> hi(m);
    double nyquist = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t t = 0; t < m; ++t) {
            buf[t] = series[t][x];
        }
        spectral::dft_1d(buf, false);
        for (std::size_t j = 0; j < m; ++j) {
            bin_power[j] += std::norm(buf[j]);
        }
        if (m % 2 == 0) {
            nyquist = std::max(nyquist, std::abs(buf[m / 2]));
        }
        // Bins with signed index > 0 oscillate as e^{+i omega t}.
        for (std::size_t j = 0; j < m; ++j) {
            hi[j] = signed_bin(j, m) > 0 ? buf[j] : cplx{0.0, 0.0};
            buf[j] = signed_bin(j, m) > 0 ? cplx{0.0, 0.0} : buf[j];
        }
        spectral::dft_1d(hi, true);
        spectral::dft_1d(buf, true);
        for (std::size_t t = 0; t < m; ++t) {
            plus[t][x] = hi[t] / static_cast<double>(m);
            minus[t][x] = buf[t] / static_cast<double>(m);
        }
    }
    const double peak = std::sqrt(*std::max_element(bin_power.begin(), bin_power.end()));
    if (m % 2 == 0 && nyquist > 1e-10 * peak && peak > 0.0) {
        fail_argument("time series has content at the temporal Nyquist frequency",
                      "relative amplitude " + std::to_string(nyquist / peak));
    }

    std::vector<ComplexField> pf;
    std::vector<ComplexField> mf;
    double pp = 0.0;
    double pm = 0.0;
    double err = 0.0;
    double vmax = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        pf.emplace_back(grid, std::move(plus[t]));
        mf.emplace_back(grid, std::move(minus[t]));
        pp += pf.back().norm_squared();
        pm += mf.back().norm_squared();
        for (std::size_t x = 0; x < n; ++x) {
            err = std::max(err, std::abs(series[t][x] - pf.back()[x] - mf.back()[x]));
            vmax = std::max(vmax, std::abs(series[t][x]));
        }
    }

    // Least common period: M / gcd of the occupied bin indices.
    const double total = std::accumulate(bin_power.begin(), bin_power.end(), 0.0);
    std::size_t g = 0;
    for (std::size_t j = 0; j < m; ++j) {
        if (bin_power[j] > 1e-20 * total) {
            g = std::gcd(g, static_cast<std::size_t>(std::abs(signed_bin(j, m))));
        }
    }
    g = std::gcd(g, m);

    PartialWaves out{TimeSeriesField(std::move(pf), series.dt()),
                     TimeSeriesField(std::move(mf), series.dt())};
    out.power_plus = pp / static_cast<double>(m);
    out.power_minus = pm / static_cast<double>(m);
    out.reconstruction_error = vmax > 0.0 ? err / vmax : err;
    out.common_period = g == 0 ? 1 : m / g;
    return out;
}

CurrentField convection_current(const ComplexField &psi, double k0) {
    if (!(k0 >= 0.0) || !std::isfinite(k0)) {
        fail_argument("k0 must be non-negative and finite");
    }
    const Grid &grid = psi.grid();
    const double hbar = cgs().hbar;
    CurrentField out{grid, {}, std::vector<double>(grid.size())};
    for (int a = 0; a < grid.dim(); ++a) {
        const auto d = spectral::derivative(grid, psi.values(), a);
        std::vector<double> comp(grid.size());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            comp[i] = hbar * (std::conj(psi[i]) * d[i]).imag();
        }
        out.j.push_back(std::move(comp));
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.rho_t[i] = hbar * k0 * std::norm(psi[i]);
    }
    return out;
}

double current_continuity(const TimeSeriesField &series, double k0) {
    if (!(k0 > 0.0)) {
        fail_argument("k0 must be positive");
    }
    const Grid &grid = series.grid();
    const std::size_t m = series.size();
    const auto &k = cgs();
    const double flux_scale = 2.0 * k.c;  // hbar k0 / m*
    double sum = 0.0;
    double rho_dot_max = 0.0;
    double rho_max = 0.0;
    double k2_mean = 0.0;
    const auto k2 = grid.k_squared();
    for (std::size_t t = 1; t + 1 < m; ++t) {
        const ComplexField &psi = series[t];
        const auto lap = spectral::laplacian_denoised(grid, psi.values());
        const auto coeff = spectral::coefficients(psi);
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < k2.size(); ++i) {
            num += k2[i] * std::norm(coeff[i]);
            den += std::norm(coeff[i]);
        }
        k2_mean = std::max(k2_mean, den > 0.0 ? num / den : 0.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double rho_dot = k.hbar * k0 *
                                   (std::norm(series[t + 1][i]) - std::norm(series[t - 1][i])) /
                                   (2.0 * series.dt());
            const double div_j = k.hbar * (std::conj(psi[i]) * lap[i]).imag();
            const double r = rho_dot + flux_scale * div_j;
            sum += r * r;
            rho_dot_max = std::max(rho_dot_max, std::abs(rho_dot));
            rho_max = std::max(rho_max, k.hbar * k0 * std::norm(psi[i]));
        }
    }
    const double rms = std::sqrt(sum / static_cast<double>((m - 2) * grid.size()));
    double k_fund = 0.0;
    for (int a = 0; a < grid.dim(); ++a) {
        k_fund = std::max(k_fund, 2.0 * std::numbers::pi / grid.length(a));
    }
    const double rate = k.c * (k2_mean + k_fund * k_fund) / k0;
    const double denom = rho_dot_max + 1e-4 * rho_max * rate;
    if (denom == 0.0) {
        fail_argument("continuity of the null series is undefined");
    }
    return rms / denom;
}

double cross_current_average(const PartialWaves &waves, const TimeSeriesField &series) {
    const Grid &grid = series.grid();
    const std::size_t period = waves.common_period;
    if (period > series.size()) {
        fail_argument("series shorter than the common period");
    }
    const double hbar = cgs().hbar;
    std::vector<std::vector<double>> avg(grid.dim(), std::vector<double>(grid.size(), 0.0));
    double jmax = 0.0;
    for (std::size_t t = 0; t < period; ++t) {
        const ComplexField &p = waves.plus[t];
        const ComplexField &q = waves.minus[t];
        const auto full = convection_current(series[t], 0.0);
        for (int a = 0; a < grid.dim(); ++a) {
            const auto dp = spectral::derivative(grid, p.values(), a);
            const auto dq = spectral::derivative(grid, q.values(), a);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                avg[a][i] += hbar * (std::conj(p[i]) * dq[i] + std::conj(q[i]) * dp[i]).imag();
                jmax = std::max(jmax, std::abs(full.j[a][i]));
            }
        }
    }
    double worst = 0.0;
    for (const auto &comp : avg) {
        for (double v : comp) {
            worst = std::max(worst, std::abs(v) / static_cast<double>(period));
        }
    }
    if (jmax == 0.0) {
        return worst == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return worst / jmax;
}

std::vector<double> wave_equation_charge(const ComplexField &psi, const ComplexField &psi_dot) {
    if (psi.grid() != psi_dot.grid()) {
        fail_argument("psi and psi_dot must share a grid");
    }
    const auto &k = cgs();
    std::vector<double> q(psi.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = k.hbar / k.c * (std::conj(psi_dot[i]) * psi[i]).imag();
    }
    return q;
}

}  // namespace gwf
