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


#include "gwfield/bosestat.hpp"

#include <algorithm>
#include <bit>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"

namespace gwf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kRowCap = 50'000'000;

void require_positive(double v, const char *what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        fail_argument(std::string(what) + " must be positive and finite");
    }
}

double log_sum_exp(const std::vector<double> &v) {
    const double m = *std::max_element(v.begin(), v.end());
    double s = 0.0;
    for (double x : v) {
        s += std::exp(x - m);
    }
    return m + std::log(s);
}

// Log-probabilities of one band row at multiplier 1/beta, eps = h nu / beta.
struct BandSolve {
    std::vector<double> lq;
    int iterations = 0;
    double residual = 0.0;
};

double stationarity_residual(const std::vector<double> &lq, double eps) {
    double worst = 0.0;
    for (std::size_t r = 0; r < lq.size(); ++r) {
        const double re = static_cast<double>(r) * eps;
        worst = std::max(worst, std::abs(lq[r] + re - lq[0]) / std::max(1.0, re));
    }
    return worst;
}

BandSolve ascend_band(std::size_t rows, double eps, const MaxEntOptions &opt) {
    constexpr double eta = 0.5;
    BandSolve out;
    out.lq.assign(rows, -std::log(static_cast<double>(rows)));
    for (;;) {
        out.residual = stationarity_residual(out.lq, eps);
        if (out.residual <= opt.kkt_tolerance) {
            return out;
        }
        if (out.iterations >= opt.max_iterations) {
            std::ostringstream ctx;
            ctx << "eps=" << eps << " residual=" << out.residual;
            fail_numerical("entropy ascent did not converge", ctx.str());
        }
        for (std::size_t r = 0; r < rows; ++r) {
            out.lq[r] = (1.0 - eta) * out.lq[r] - eta * static_cast<double>(r) * eps;
        }
        const double z = log_sum_exp(out.lq);
        for (double &v : out.lq) {
            v -= z;
        }
        ++out.iterations;
    }
}

struct Evaluation {
    std::vector<BandSolve> rows;
    double energy = 0.0;
};

Evaluation evaluate(const std::vector<FrequencyBand> &bands, std::size_t rows, double beta,
                    const MaxEntOptions &opt, int &inner) {
    Evaluation ev;
    for (const auto &b : bands) {
        BandSolve s = ascend_band(rows, b.quantum() / beta, opt);
        inner += s.iterations;
        double mean_r = 0.0;
        for (std::size_t r = 1; r < rows; ++r) {
            mean_r += static_cast<double>(r) * std::exp(s.lq[r]);
        }
        ev.energy += b.quantum() * b.states() * mean_r;
        ev.rows.push_back(std::move(s));
    }
    return ev;
}

struct Solve {
    double beta = 0.0;
    Evaluation ev;
    int steps = 0;
    bool representable = true;
};

Solve solve_multiplier(const std::vector<FrequencyBand> &bands, std::size_t rows, double E_target,
                       const MaxEntOptions &opt, int &inner) {
    Solve out;
    double ceiling = 0.0;
    double mean_quantum = 0.0;
    double cells = 0.0;
    for (const auto &b : bands) {
        ceiling += 0.5 * static_cast<double>(rows - 1) * b.quantum() * b.states();
        mean_quantum += b.quantum() * b.states();
        cells += b.states();
    }
    if (E_target >= ceiling) {
        out.representable = false;
        return out;
    }
    mean_quantum /= cells;
    double lo = mean_quantum;
    double hi = mean_quantum;
    Evaluation e = evaluate(bands, rows, lo, opt, inner);
    int guard = 0;
    if (e.energy < E_target) {
        while (e.energy < E_target) {
            lo = hi;
            hi *= 2.0;
            e = evaluate(bands, rows, hi, opt, inner);
            if (++guard > 2000 || !std::isfinite(hi)) {
                fail_numerical("could not bracket the energy multiplier");
            }
        }
    } else {
        while (e.energy >= E_target) {
            hi = lo;
            lo *= 0.5;
            e = evaluate(bands, rows, lo, opt, inner);
            if (++guard > 2000 || lo == 0.0) {
                fail_numerical("could not bracket the energy multiplier");
            }
        }
    }
    while (hi / lo - 1.0 > 4.0 * std::numeric_limits<double>::epsilon() && out.steps < 200) {
        const double mid = std::sqrt(lo * hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (evaluate(bands, rows, mid, opt, inner).energy < E_target) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++out.steps;
    }
    out.beta = std::sqrt(lo * hi);
    out.ev = evaluate(bands, rows, out.beta, opt, inner);
    return out;
}

}  // namespace

double band_state_count(double nu, double d_nu) {
    require_positive(nu, "nu");
    require_positive(d_nu, "d_nu");
    const double c = cgs().c;
    return 8.0 * kPi * nu * nu * d_nu / (c * c * c);
}

FrequencyBand FrequencyBand::create(double nu, double d_nu, double volume) {
    require_positive(volume, "band volume");
    return FrequencyBand(nu, d_nu, volume, band_state_count(nu, d_nu));
}

double FrequencyBand::quantum() const {
    return cgs().h() * nu_;
}

std::size_t occupancy_rows_needed(const FrequencyBand &band, double beta) {
    require_positive(beta, "beta");
    const double eps = band.quantum() / beta;
    const double rows = std::ceil(-std::log(kOccupancyTail) / eps);
    if (!(rows < static_cast<double>(kRowCap))) {
        fail_numerical("occupancy table would exceed the row cap",
                       "h nu / beta = " + std::to_string(eps));
    }
    return std::max<std::size_t>(1, static_cast<std::size_t>(rows));
}

std::vector<double> geometric_occupancy(const FrequencyBand &band, double T, std::size_t r_max) {
    require_positive(T, "T");
    const double beta = cgs().k_B * T;
    const std::size_t R = std::max(r_max, occupancy_rows_needed(band, beta));
    const double eps = band.quantum() / beta;
    const double head = band.states() * -std::expm1(-eps);
    std::vector<double> row(R + 1);
    for (std::size_t r = 0; r <= R; ++r) {
        row[r] = head * std::exp(-static_cast<double>(r) * eps);
    }
    return row;
}

double OccupancyTable::energy() const {
    double e = 0.0;
    for (std::size_t s = 0; s < bands.size(); ++s) {
        double n = 0.0;
        for (std::size_t r = 1; r < p[s].size(); ++r) {
            n += static_cast<double>(r) * p[s][r];
        }
        e += bands[s].quantum() * n;
    }
    return e;
}

double OccupancyTable::photon_count() const {
    double n = 0.0;
    for (const auto &row : p) {
        for (std::size_t r = 1; r < row.size(); ++r) {
            n += static_cast<double>(r) * row[r];
        }
    }
    return n;
}

double OccupancyTable::ln_multiplicity() const {
    double lw = 0.0;
    for (std::size_t s = 0; s < bands.size(); ++s) {
        const double av = bands[s].states();
        lw += av * std::log(av);
        for (double v : p[s]) {
            if (v > 0.0) {
                lw -= v * std::log(v);
            }
        }
    }
    return lw;
}

MaxEntResult maximize_entropy(const std::vector<FrequencyBand> &bands, double E_target,
                              const MaxEntOptions &options) {
    if (bands.empty()) {
        fail_argument("at least one band is required");
    }
    require_positive(E_target, "E_target");
    if (!(options.tol > 0.0) || options.max_iterations < 1 || !(options.kkt_tolerance > 0.0)) {
        fail_argument("invalid maximizer options");
    }
    const bool automatic = options.r_max == 0;
    if (!automatic && options.r_max < 1) {
        fail_argument("r_max must be at least 1");
    }
    std::size_t rows = automatic ? 64 : options.r_max + 1;
    MaxEntResult result;
    Solve solve;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 64) {
            fail_numerical("occupancy row count did not settle");
        }
        solve = solve_multiplier(bands, rows, E_target, options, result.inner_iterations);
        std::size_t needed = 0;
        if (solve.representable) {
            for (const auto &b : bands) {
                needed = std::max(needed, occupancy_rows_needed(b, solve.beta) + 1);
            }
        }
        if (solve.representable && needed <= rows) {
            break;
        }
        if (!automatic) {
            fail_argument("E_target beyond R_max representability",
                          "r_max = " + std::to_string(options.r_max));
        }
        const std::size_t grown = std::max(2 * rows, needed);
        if (grown > kRowCap) {
            fail_numerical("occupancy table would exceed the row cap");
        }
        rows = grown;
    }

    result.bisection_steps = solve.steps;
    result.table.bands = bands;
    for (std::size_t s = 0; s < bands.size(); ++s) {
        const auto &lq = solve.ev.rows[s].lq;
        std::vector<double> row(lq.size());
        for (std::size_t r = 0; r < lq.size(); ++r) {
            row[r] = bands[s].states() * std::exp(lq[r]);
        }
        result.table.p.push_back(std::move(row));
        result.kkt_residual = std::max(result.kkt_residual, solve.ev.rows[s].residual);
    }

    // Certificate: compare against the closed-form geometric row at the fitted multiplier.
    for (std::size_t s = 0; s < bands.size(); ++s) {
        const auto &row = result.table.p[s];
        const double eps = bands[s].quantum() / solve.beta;
        const double head = bands[s].states() * -std::expm1(-eps);
        for (std::size_t r = 0; r < row.size(); ++r) {
            const double ref = head * std::exp(-static_cast<double>(r) * eps);
            if (ref > 1e-9 * bands[s].states() && std::abs(row[r] / ref - 1.0) > options.tol) {
                std::ostringstream ctx;
                ctx << "band " << s << " row " << r << " beta=" << solve.beta;
                fail_numerical("maximizer failed the geometric certificate", ctx.str());
            }
        }
    }

    result.state.beta = solve.beta;
    result.state.E = result.table.energy();
    result.state.S_entropy = cgs().k_B * result.table.ln_multiplicity();
    result.state.N_photons = result.table.photon_count();
    return result;
}

double entropy_temperature_residual(const std::vector<FrequencyBand> &bands, double E_target,
                                    double rel_step) {
    require_positive(rel_step, "rel_step");
    const auto mid = maximize_entropy(bands, E_target);
    const auto up = maximize_entropy(bands, E_target * (1.0 + rel_step));
    const auto down = maximize_entropy(bands, E_target * (1.0 - rel_step));
    const double dS_dE =
        (up.state.S_entropy - down.state.S_entropy) / (up.state.E - down.state.E);
    const double T = mid.state.beta / cgs().k_B;
    return std::abs(dS_dE * T - 1.0);
}

double planck_density(double nu, double T) {
    require_positive(nu, "nu");
    require_positive(T, "T");
    const auto &k = cgs();
    const double x = k.h() * nu / (k.k_B * T);
    return 8.0 * kPi * nu * nu / (k.c * k.c * k.c) * k.h() * nu / std::expm1(x);
}

double planck_peak_x() {
    auto f = [](double x) { return 3.0 * -std::expm1(-x) - x; };
    std::uintmax_t iters = 100;
    const auto [a, b] = boost::math::tools::toms748_solve(
        f, 1.0, 5.0, boost::math::tools::eps_tolerance<double>(52), iters);
    return 0.5 * (a + b);
}

double spontaneous_equilibrium_check(double nu, double T, double g_ratio,
                                     const EquilibriumPerturbation &perturbation) {
    require_positive(nu, "nu");
    require_positive(T, "T");
    require_positive(g_ratio, "g_ratio");
    require_positive(perturbation.occupancy_scale, "occupancy_scale");
    const auto &k = cgs();
    const double x = k.h() * nu / (k.k_B * T);
    const double A = band_state_count(nu, 1.0);
    const double N = perturbation.occupancy_scale * A / std::expm1(x);
    const double A_emit = perturbation.spontaneous ? A : 0.0;
    const double n2_over_n1 = g_ratio * std::exp(-x);
    // Emission per absorption, n2 (N + A) h nu / (n1 N h nu), split into the
    // stimulated part n2/n1 and the spontaneous part (n2/n1)(A/N); the latter
    // falls back to g (1 - e^{-x}) (A_emit / A) / scale once N underflows.
    const double stimulated = n2_over_n1;
    const double spontaneous = N > 0.0 && std::isfinite(A / N)
                                   ? n2_over_n1 * (A_emit / N)
                                   : g_ratio * -std::expm1(-x) * (A_emit / A) /
                                         perturbation.occupancy_scale;
    return std::abs(stimulated + spontaneous - g_ratio);
}

PhotonWavefunction PhotonWavefunction::create(std::vector<ModeFunction> modes,
                                              std::vector<std::size_t> occupation) {
    if (modes.size() != occupation.size()) {
        fail_argument("one occupation number per mode is required");
    }
    std::vector<std::size_t> labels;
    double log_fact_product = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < occupation.size(); ++i) {
        n += occupation[i];
        if (n > kMaxParticles) {
            fail_argument("beyond brute-force scale", "N > " + std::to_string(kMaxParticles));
        }
        if (occupation[i] > 0 && !modes[i]) {
            fail_argument("occupied mode has no function");
        }
        labels.insert(labels.end(), occupation[i], i);
        log_fact_product += std::lgamma(static_cast<double>(occupation[i]) + 1.0);
    }
    if (n == 0) {
        fail_argument("at least one photon is required");
    }
    const double fact_product = std::round(std::exp(log_fact_product));
    const double arrangements =
        std::round(std::exp(std::lgamma(static_cast<double>(n) + 1.0))) / fact_product;
    return PhotonWavefunction(std::move(modes), std::move(labels), arrangements,
                              1.0 / (std::sqrt(arrangements) * fact_product));
}

std::complex<double> PhotonWavefunction::operator()(std::span<const double> x) const {
    const std::size_t n = labels_.size();
    if (x.size() != n) {
        fail_argument("coordinate count does not match particle count");
    }
    std::complex<double> m[kMaxParticles][kMaxParticles];
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = modes_[labels_[i]](x[j]);
        }
    }
    // Permanent by subset dynamic programming: f[mask] sums over all ways of
    // placing labels 0..popcount(mask)-1 onto the coordinates in mask.
    std::vector<std::complex<double>> f(std::size_t{1} << n, {0.0, 0.0});
    f[0] = 1.0;
    for (std::size_t mask = 0; mask + 1 < f.size(); ++mask) {
        if (f[mask] == std::complex<double>{0.0, 0.0}) {
            continue;
        }
        const auto row = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t j = 0; j < n; ++j) {
            if ((mask & (std::size_t{1} << j)) == 0) {
                f[mask | (std::size_t{1} << j)] += f[mask] * m[row][j];
            }
        }
    }
    return norm_ * f.back();
}

PhotonWavefunction symmetrize_photons(std::vector<ModeFunction> modes,
                                      std::vector<std::size_t> occupation) {
    return PhotonWavefunction::create(std::move(modes), std::move(occupation));
}

}  // namespace gwf
