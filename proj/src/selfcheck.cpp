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


#include "gwfield/selfcheck.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "gwfield/bosestat.hpp"
#include "gwfield/cmbrvac.hpp"
#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"
#include "gwfield/helicity.hpp"
#include "gwfield/hybridmeas.hpp"
#include "gwfield/madelung.hpp"
#include "gwfield/statequant.hpp"
#include "gwfield/wavemech.hpp"

namespace gwf::selfcheck {

namespace {

constexpr double kPi = std::numbers::pi;

class Verdict {
   public:
    /// Records `value < bound` (or `value <= bound` when `inclusive`).
    void below(const std::string &label, double value, double bound, bool inclusive = false) {
        const bool ok = inclusive ? value <= bound : value < bound;
        add(ok, label, value, inclusive ? "<=" : "<", bound);
    }
    void above(const std::string &label, double value, double bound, bool inclusive = false) {
        const bool ok = inclusive ? value >= bound : value > bound;
        add(ok, label, value, inclusive ? ">=" : ">", bound);
    }
    void note(const std::string &label, double value) {
        sep();
        out_ << label << "=" << std::setprecision(6) << value;
    }
    bool ok() const {
        return ok_;
    }
    std::string text() const {
        return out_.str();
    }

   private:
    void sep() {
        if (!out_.str().empty()) {
            out_ << "; ";
        }
    }
    void add(bool ok, const std::string &label, double value, const char *op, double bound) {
        sep();
        out_ << label << "=" << std::setprecision(6) << value << " " << op << " " << bound;
        if (!ok) {
            out_ << " [FAIL]";
            ok_ = false;
        }
    }
    std::ostringstream out_;
    bool ok_ = true;
};

double rel(double a, double b) {
    return std::abs(a / b - 1.0);
}

// 1. Anomalous moment round trip.
void anomalous_moment_round_trip(Verdict &v) {
    const double target = 0.0011614;
    const double a_e = anomalous_moment(VacuumModel::create(2.7, 2.87e9), MomentPath::Numeric);
    v.note("a_e", a_e);
    v.below("rel(a_e, 0.0011614)", rel(a_e, target), 0.01);
    const double w = cutoff_for_moment(cgs().alpha / (2.0 * kPi), MomentPath::Numeric);
    v.note("omega_c", w);
    v.below("rel(omega_c, 2.87e9)", rel(w, 2.87e9), 0.01);
}

// 2. Casimir coefficient, a^-6 law, derivative consistency, separation for 1e9 dyne/cm^2.
void casimir(Verdict &v) {
    const double c = casimir_coefficient(2.7);
    v.note("coefficient", c);
    v.below("rel(coefficient, 7.5e-17)", rel(c, kReferenceCasimirCoefficient), 0.15);
    double law = 0.0;
    for (double a : {1e-6, 3e-5, 1e-3, 0.2}) {
        law = std::max(law, rel(casimir_pressure(a, 2.7) / casimir_pressure(2.0 * a, 2.7), 64.0));
    }
    v.below("a^-6 law rel err", law, 1e-13);
    double deriv = 0.0;
    for (double a : {1e-5, 6.6e-5, 1e-3, 0.1}) {
        deriv = std::max(deriv, casimir_derivative_consistency(a, 2.7));
    }
    v.below("dRho/da vs P", deriv, 1e-6);
    const double a9 = casimir_separation(1e9, 2.7);
    v.note("a(|P|=1e9)", a9);
    v.below("rel(a, 6.5e-5)", rel(a9, 6.5e-5), 0.03);
    v.below("rel(|P(a)|, 1e9)", rel(std::abs(casimir_pressure(a9, 2.7)), 1e9), 1e-12);
    v.note("|P(4e-5 cm)|", std::abs(casimir_pressure(4e-5, 2.7)));
}

// 3. QED contrast.
void qed_contrast(Verdict &v) {
    const double rho = qed_vacuum_energy(cgs().omega_P);
    const double decades = std::log10(rho / kObservedVacuumBound);
    v.note("rho_QED", rho);
    v.above("decades over 1e-6", decades, 118.0, true);
    v.below("|decades - 120|", std::abs(decades - 120.0), 2.0, true);
}

// 4. Zero-point energies.
void zero_point(Verdict &v) {
    const auto &k = cgs();
    const double a = 0.25;
    double box_mean = 0.0;
    double box_point = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const Grid g = Grid::line(256, 2.0 * a);
        const double kn = n * kPi / a;
        const auto psi = normalize(
            ComplexField::sample(g, [kn](std::span<const double> x) { return std::sin(kn * x[0]); }));
        const auto p = EffectiveMassParams::from_reference_frequency(k.c * kn);
        const auto form = polar_decompose(psi);
        const auto qf = quantum_potential(form, p.m_star);
        const double en = box_zero_point_energy(n, a);
        box_mean = std::max(box_mean, rel(qf.weighted_mean(form.rho), en));
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!qf.masked[i]) {
                box_point = std::max(box_point, rel(qf.Q[i], en));
            }
        }
    }
    v.below("box <Q>/Q_n rel err (n=1..5)", box_mean, 1e-4);
    v.below("box pointwise Q rel err", box_point, 1e-4);

    const double L = 1.0;
    const Grid g = Grid::line(512, L);
    const double omega = k.c * 2.0 * kPi * 50.0;
    const auto p = EffectiveMassParams::from_reference_frequency(omega);
    const double sigma = L / 30.0;
    const double w0 = k.hbar / (2.0 * p.m_star * sigma * sigma);
    const double beta = p.m_star * w0 * w0;
    v.below("rel(w0, sqrt(2 beta c^2 / hbar omega))",
            rel(w0, std::sqrt(2.0 * beta * k.c * k.c / (k.hbar * omega))), 1e-12);
    const double x0 = 0.5;
    const auto psi = normalize(make_gaussian_packet({{x0}, sigma, {0.0}}, g));
    std::vector<double> u(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.coordinate(0, i) - x0;
        u[i] = 0.5 * beta * x * x;
    }
    const double zp = 0.5 * k.hbar * w0;
    const auto e = energy_decomposition(psi, p, u);
    v.below("oscillator rel(E, hbar w0/2)", rel(e.E, zp), 1e-6);
    const auto form = polar_decompose(psi);
    const auto qf = quantum_potential(form, p.m_star);
    const double rho_max = *std::max_element(form.rho.begin(), form.rho.end());
    double point = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (form.rho[i] > 1e-6 * rho_max) {
            point = std::max(point, std::abs(qf.Q[i] + u[i] - zp) / zp);
        }
    }
    v.below("max |Q + U - hbar w0/2| / (hbar w0/2)", point, 1e-6);
    v.below("rel(Q(x0), hbar w0/2)", rel(qf.Q[256], zp), 1e-6);
    v.note("<Q>_rho / (hbar w0/2)", qf.weighted_mean(form.rho) / zp);
}

// 5. Dispersion dichotomy.
void dispersion(Verdict &v) {
    const auto &k = cgs();
    const double L = 1.0;
    const Grid g = Grid::line(4096, L);
    const double sigma0 = L / 64.0;
    const auto psi0 = make_gaussian_packet({{0.3}, sigma0, {2.0 * kPi * 20.0}}, g);
    const double w_start = packet_width(psi0);
    const auto state = one_way_state(psi0);
    double classical = 0.0;
    for (double crossings : {0.37, 1.0, 2.71, 5.5, 8.13, 10.0}) {
        const auto s = evolve_classical_wave(state, 0.0, crossings * L / k.c);
        classical = std::max(classical, rel(packet_width(s.psi), w_start));
    }
    v.below("classical width drift (10 crossings)", classical, 1e-3);
    const auto p = EffectiveMassParams::from_reference_frequency(k.c * 2.0 * kPi * 100.0);
    const double t_spread = 2.0 * p.m_star * sigma0 * sigma0 / k.hbar;
    double quantum = 0.0;
    double growth = 0.0;
    for (double r : {0.5, 1.0, 2.0, 4.0}) {
        const auto psi = evolve_schrodinger(psi0, p, r * t_spread);
        const double w = packet_width(psi);
        quantum = std::max(quantum, rel(w, free_gaussian_width(sigma0, p, r * t_spread)));
        growth = std::max(growth, w / w_start);
    }
    v.below("Schrodinger width vs sigma(t)", quantum, 1e-2);
    v.note("Schrodinger max width ratio", growth);
}

FrequencyBand band_at_ratio(double ratio, double T, double cells) {
    const auto &k = cgs();
    const double nu = ratio * k.k_B * T / k.h();
    const double d_nu = 0.05 * nu;
    return FrequencyBand::create(nu, d_nu, cells / band_state_count(nu, d_nu));
}

// 6. Entropy-maximization certificate.
void entropy_certificate(Verdict &v) {
    const double T = 2.7;
    const std::vector<FrequencyBand> bands{band_at_ratio(0.5, T, 200.0),
                                           band_at_ratio(1.5, T, 500.0),
                                           band_at_ratio(4.0, T, 1000.0)};
    const double kT = cgs().k_B * T;
    double E = 0.0;
    for (const auto &b : bands) {
        const double x = std::exp(-b.quantum() / kT);
        E += b.quantum() * b.states() * x / (1.0 - x);
    }
    const auto res = maximize_entropy(bands, E);
    OccupancyTable closed{bands, {}};
    double entry = 0.0;
    for (std::size_t s = 0; s < bands.size(); ++s) {
        closed.p.push_back(geometric_occupancy(bands[s], T, res.table.p[s].size() - 1));
        for (std::size_t r = 0; r < closed.p[s].size(); ++r) {
            if (closed.p[s][r] > 1e-9 * bands[s].states()) {
                entry = std::max(entry, rel(res.table.p[s][r], closed.p[s][r]));
            }
        }
    }
    const double S_closed = cgs().k_B * closed.ln_multiplicity();
    v.below("max entry rel err", entry, 1e-6);
    v.below("entropy gap / S", std::abs(S_closed - res.state.S_entropy) / S_closed, 1e-10);
    v.below("rel(beta, kT)", rel(res.state.beta, kT), 1e-8);
    v.below("|dS/dE T - 1|", entropy_temperature_residual(bands, E), 1e-6);
}

// 7. Planck-law properties.
void planck(Verdict &v) {
    const auto &k = cgs();
    const double T = 300.0;
    const double nu = 0.01 * k.k_B * T / k.h();
    const double rj = 8.0 * kPi * nu * nu * k.k_B * T / (k.c * k.c * k.c);
    v.below("Rayleigh-Jeans rel dev at x=0.01", rel(planck_density(nu, T), rj), 0.005);
    const double xs = planck_peak_x();
    v.note("x*", xs);
    v.below("|x* - 2.8214|", std::abs(xs - 2.8214), 5e-4, true);
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double f = std::pow(10.0, 8.0 + 7.0 * u(rng));
        const double t = std::pow(10.0, -1.0 + 5.0 * u(rng));
        const double g = std::pow(10.0, -1.0 + 2.0 * u(rng));
        worst = std::max(worst, spontaneous_equilibrium_check(f, t, g));
    }
    v.below("max equilibrium residual (100 triples)", worst, 1e-12);
}

CVector random_vector(Eigen::Index d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector out(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        out(i) = {g(rng), g(rng)};
    }
    return out.normalized();
}

CMatrix random_unitary(Eigen::Index d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(d, d);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        m(i) = {g(rng), g(rng)};
    }
    Eigen::HouseholderQR<CMatrix> qr(m);
    return qr.householderQ() * CMatrix::Identity(d, d);
}

struct StateDefects {
    double hermitian = 0.0;
    double trace = 0.0;
    double negativity = 0.0;
};

void accumulate(StateDefects &d, const DensityMatrix &rho) {
    const CMatrix &m = rho.matrix();
    d.hermitian = std::max(d.hermitian, (m - m.adjoint()).cwiseAbs().maxCoeff());
    d.trace = std::max(d.trace, std::abs(m.trace() - 1.0));
    for (double ev : rho.eigenvalues()) {
        d.negativity = std::max(d.negativity, -ev);
    }
}

// 8. Operator / measurement suite.
void measurement(Verdict &v) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    StateDefects luders_d;
    StateDefects vn_d;
    double idem_luders = 0.0;
    double idem_vn = 0.0;
    double mix = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::Index d = 2 + trial % 5;
        std::vector<double> w(d);
        std::vector<CVector> states;
        double total = 0.0;
        for (auto &x : w) {
            x = u(rng);
            total += x;
        }
        for (auto &x : w) {
            x /= total;
            states.push_back(random_vector(d, rng));
        }
        const auto rho = DensityMatrix::mixture(w, states);
        const CMatrix basis = random_unitary(d, rng);
        ProjectorSet proj = ProjectorSet::from_basis(basis);
        if (trial % 2 == 1) {
            std::vector<CMatrix> coarse{proj[0] + proj[1]};
            CMatrix rest = CMatrix::Zero(d, d);
            for (std::size_t k = 2; k < proj.size(); ++k) {
                rest += proj[k];
            }
            if (d > 2) {
                coarse.push_back(rest);
            }
            if (coarse.size() == 1) {
                coarse.push_back(CMatrix::Zero(d, d));
            }
            proj = ProjectorSet::create(coarse);
        }
        const auto probs = outcome_probabilities(rho, proj);
        CMatrix mixed = CMatrix::Zero(d, d);
        for (std::size_t k = 0; k < proj.size(); ++k) {
            if (probs[k] < 1e-10) {
                continue;
            }
            const auto once = luders_update(rho, proj, k);
            const auto twice = luders_update(once.state, proj, k);
            accumulate(luders_d, once.state);
            idem_luders = std::max(
                idem_luders, (twice.state.matrix() - once.state.matrix()).cwiseAbs().maxCoeff());
            idem_luders = std::max(idem_luders, std::abs(twice.probability - 1.0));
            mixed += once.probability * once.state.matrix();
        }
        const auto vn = von_neumann_update(rho, proj);
        accumulate(vn_d, vn);
        idem_vn = std::max(idem_vn,
                           (von_neumann_update(vn, proj).matrix() - vn.matrix()).cwiseAbs().maxCoeff());
        mix = std::max(mix, (mixed - vn.matrix()).cwiseAbs().maxCoeff());
    }
    v.below("Luders hermiticity", luders_d.hermitian, 1e-12);
    v.below("Luders trace", luders_d.trace, 1e-12);
    v.below("Luders negativity", luders_d.negativity, 1e-12);
    v.below("Luders idempotence", idem_luders, 1e-12);
    v.below("vN hermiticity", vn_d.hermitian, 1e-12);
    v.below("vN trace", vn_d.trace, 1e-12);
    v.below("vN negativity", vn_d.negativity, 1e-12);
    v.below("vN idempotence", idem_vn, 1e-12);
    v.below("sum_k p_k Luders_k - vN", mix, 1e-12);

    double trace_gap = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        const CVector psi = random_vector(static_cast<Eigen::Index>(n), rng);
        std::vector<double> p(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = static_cast<double>(i) - 0.5 * static_cast<double>(n);
        }
        std::vector<std::complex<double>> c(psi.data(), psi.data() + n);
        const auto rec = run_measurement(MeasurementSetup::create(p, c, 0.0, 0.1, 4.0, 1.0));
        const auto vn = von_neumann_update(DensityMatrix::pure(psi),
                                           ProjectorSet::computational(static_cast<Eigen::Index>(n)));
        trace_gap = std::max(
            trace_gap, (partial_trace_system(rec).matrix() - vn.matrix()).cwiseAbs().maxCoeff());
    }
    v.below("partial trace - vN update", trace_gap, 1e-12);

    const double s = 1.0 / std::sqrt(2.0);
    const auto rec = run_measurement(MeasurementSetup::create({1.0, -1.0}, {s, s}, 0.0, 0.1, 1.0, 1.0));
    v.below("sampling max dev (n=1e6, equal)", sample_outcomes(rec, 1'000'000, 20260).max_deviation,
            5e-3);
    const auto rec3 = run_measurement(MeasurementSetup::create(
        {-1.0, 0.0, 2.0}, {std::sqrt(0.1), std::sqrt(0.3), std::sqrt(0.6)}, 0.0, 0.1, 1.0, 1.0));
    v.below("sampling max dev (n=1e6, 0.1/0.3/0.6)",
            sample_outcomes(rec3, 1'000'000, 20261).max_deviation, 5e-3);
}

// 9. Symmetrization oracle.
std::complex<double> enumerate_arrangements(const std::vector<ModeFunction> &modes,
                                            std::vector<std::size_t> labels,
                                            const std::vector<double> &x) {
    std::sort(labels.begin(), labels.end());
    std::complex<double> sum{0.0, 0.0};
    double count = 0.0;
    do {
        std::complex<double> prod{1.0, 0.0};
        for (std::size_t j = 0; j < labels.size(); ++j) {
            prod *= modes[labels[j]](x[j]);
        }
        sum += prod;
        count += 1.0;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return sum / std::sqrt(count);
}

void occupation_patterns(std::size_t modes, std::size_t remaining, std::vector<std::size_t> &cur,
                         std::vector<std::vector<std::size_t>> &out) {
    if (cur.size() + 1 == modes) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
        cur.push_back(k);
        occupation_patterns(modes, remaining - k, cur, out);
        cur.pop_back();
    }
}

void symmetrization(Verdict &v) {
    constexpr std::size_t kModes = 6;
    std::vector<ModeFunction> modes;
    for (std::size_t m = 1; m <= kModes; ++m) {
        const double k = kPi * static_cast<double>(m);
        const double phase = 0.4 * static_cast<double>(m);
        modes.push_back(
            [k, phase](double x) { return std::sqrt(2.0) * std::sin(k * x) * std::polar(1.0, phase * x); });
    }
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    std::size_t patterns = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::vector<std::size_t>> all;
        std::vector<std::size_t> cur;
        occupation_patterns(kModes, n, cur, all);
        for (const auto &occ : all) {
            const auto psi = symmetrize_photons(modes, occ);
            for (int t = 0; t < 4; ++t) {
                std::vector<double> x(n);
                for (double &xi : x) {
                    xi = u(rng);
                }
                worst = std::max(worst, std::abs(psi(x) - enumerate_arrangements(modes, psi.labels(), x)));
            }
            ++patterns;
        }
    }
    v.note("patterns", static_cast<double>(patterns));
    v.below("max |Psi - enumeration|", worst, 1e-12);
}

// 10. Conservation suite.
void conservation(Verdict &v) {
    const auto &k = cgs();
    {
        const Grid g({64, 64}, {1.0, 1.0});
        const auto p = EffectiveMassParams::from_reference_frequency(k.c * 2.0 * kPi * 30.0, 2.0);
        auto psi = make_gaussian_packet({{0.4, 0.6}, 0.06, {2.0 * kPi * 3.0, -2.0 * kPi}}, g);
        const double n0 = psi.norm_squared();
        const double dt = 1e-3 * 2.0 * p.m_star * 0.06 * 0.06 / k.hbar;
        for (int i = 0; i < 1000; ++i) {
            psi = evolve_schrodinger(psi, p, dt);
        }
        v.below("Schrodinger norm drift (1e3 steps)", rel(psi.norm_squared(), n0), 1e-9);
    }
    {
        const Grid g({64, 64}, {1.0, 0.5});
        const auto psi = make_gaussian_packet({{0.5, 0.2}, 0.06, {2.0 * kPi * 2.0, 0.0}}, g);
        const auto dot = make_gaussian_packet({{0.4, 0.25}, 0.05, {0.0, 2.0 * kPi * 4.0}}, g)
                             .scaled(cplx(3e10, 1e10));
        const double mu = 7.0;
        ClassicalWaveState s(psi, dot);
        const double e0 = wave_energy(s, mu);
        const double dt = 0.0137 / k.c;
        for (int i = 0; i < 1000; ++i) {
            s = evolve_classical_wave(s, mu, dt);
        }
        v.below("wave energy drift (1e3 steps)", rel(wave_energy(s, mu), e0), 1e-9);
    }
    {
        const double a = 0.25;
        const Grid g = Grid::line(128, 2.0 * a);
        const double kn = kPi / a;
        const auto psi = normalize(
            ComplexField::sample(g, [kn](std::span<const double> x) { return std::sin(kn * x[0]); }));
        const auto p = EffectiveMassParams::from_reference_frequency(k.c * kn);
        const std::vector<double> zero(g.size(), 0.0);
        v.below("continuity, stationary box", continuity_residual(polar_decompose(psi), p, zero), 1e-8);
    }
    {
        const double L = 1.0;
        const Grid g = Grid::line(64, L);
        const double kk = 2.0 * kPi * 3.0 / L;
        const auto spec = PlaneWaveSpec::on_shell(1.0, {kk});
        const auto p = EffectiveMassParams::from_reference_frequency(spec.omega());
        const auto psi = make_plane_wave(spec, g, 0.0);
        const std::vector<double> zero(g.size(), 0.0);
        v.below("continuity, plane wave", continuity_residual(polar_decompose(psi), p, zero), 1e-10);
        std::vector<ComplexField> snaps;
        const double dt = 0.25 / spec.omega();
        for (int n = 0; n < 8; ++n) {
            snaps.push_back(evolve_schrodinger(psi, p, n * dt));
        }
        v.below("current continuity, stationary", current_continuity(TimeSeriesField(snaps, dt), p.k0),
                1e-10);
    }
    {
        const double L = 1.0;
        const Grid g = Grid::line(1024, L);
        const double sigma0 = L / 40.0;
        const auto p = EffectiveMassParams::from_reference_frequency(k.c * 2.0 * kPi * 100.0);
        const double t_spread = 2.0 * p.m_star * sigma0 * sigma0 / k.hbar;
        const auto psi0 = normalize(make_gaussian_packet({{0.4}, sigma0, {2.0 * kPi * 15.0}}, g));
        const double t = 0.5 * t_spread;
        const double dt = 1e-4 * t_spread;
        const auto before = evolve_schrodinger(psi0, p, t - dt / 2.0).density();
        const auto after = evolve_schrodinger(psi0, p, t + dt / 2.0).density();
        std::vector<double> rho_dot(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            rho_dot[i] = (after[i] - before[i]) / dt;
        }
        const auto form = polar_decompose(evolve_schrodinger(psi0, p, t));
        v.below("continuity, moving packet (dt = 1e-4 t_spread)", continuity_residual(form, p, rho_dot),
                1e-3);
        std::vector<ComplexField> snaps;
        for (int n = 0; n < 8; ++n) {
            snaps.push_back(evolve_schrodinger(psi0, p, 0.3 * t_spread + n * dt));
        }
        v.below("current continuity, moving packet",
                current_continuity(TimeSeriesField(snaps, dt), p.k0), 1e-3);
    }
}

struct Criterion {
    const char *name;
    double budget;
    void (*body)(Verdict &);
};

const Criterion kCriteria[] = {
    {"anomalous moment round trip", 1.0, anomalous_moment_round_trip},
    {"Casimir coefficient and a^-6 law", 1.0, casimir},
    {"QED vacuum contrast", 1.0, qed_contrast},
    {"zero-point energies", 5.0, zero_point},
    {"dispersion dichotomy", 30.0, dispersion},
    {"entropy-maximization certificate", 10.0, entropy_certificate},
    {"Planck-law properties", 5.0, planck},
    {"operator and measurement suite", 30.0, measurement},
    {"symmetrization oracle", 10.0, symmetrization},
    {"conservation suite", 30.0, conservation},
};

}  // namespace

int count() {
    return static_cast<int>(std::size(kCriteria));
}

CriterionResult run(int id) {
    if (id < 1 || id > count()) {
        fail_argument("no such criterion", std::to_string(id));
    }
    const Criterion &c = kCriteria[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = c.name;
    r.budget_seconds = c.budget;
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
        c.body(v);
        r.passed = v.ok();
        r.detail = v.text();
    } catch (const std::exception &e) {
        r.passed = false;
        r.detail = v.text() + (v.text().empty() ? "" : "; ") + "exception: " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds >= r.budget_seconds) {
        r.passed = false;
        r.detail += "; runtime over budget";
    }
    return r;
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= count(); ++id) {
        out.push_back(run(id));
    }
    return out;
}

std::string format_line(const CriterionResult &r) {
    std::ostringstream s;
    s << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed
      << std::setprecision(2) << r.seconds << " s / " << std::setprecision(0) << r.budget_seconds
      << " s): " << r.detail;
    return s.str();
}

}  // namespace gwf::selfcheck
