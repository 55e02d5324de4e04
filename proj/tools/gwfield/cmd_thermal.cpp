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


#include <cmath>
#include <cstdio>
#include <sstream>

#include "commands.hpp"
#include "gwfield/bosestat.hpp"
#include "gwfield/cmbrvac.hpp"
#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"
#include "gwfield/selfcheck.hpp"

namespace gwfield_cli {

namespace {

double temperature(const json &cfg) {
    const double T = cfg["T_K"];
    if (!(T > 0.0) || !std::isfinite(T)) {
        gwf::fail_argument("T_K must be positive", "T_K");
    }
    return T;
}

int run_planck(RunContext &ctx, const json &cfg) {
    const double T = temperature(cfg);
    const auto &k = gwf::cgs();
    double nu_min = 0.0;
    double nu_max = 0.0;
    long long points = cfg["nu_points"];
    if (cfg.contains("nu_grid")) {
        const std::string g = cfg["nu_grid"];
        std::istringstream in(g);
        char c1 = 0, c2 = 0;
        if (!(in >> nu_min >> c1 >> nu_max >> c2 >> points) || c1 != ':' || c2 != ':' || !in.eof()) {
            gwf::fail_argument("nu_grid must read MIN:MAX:N", "nu_grid");
        }
    } else {
        const double scale = k.k_B * T / k.h();
        nu_min = cfg.contains("nu_min_hz") ? cfg["nu_min_hz"].get<double>() : 0.01 * scale;
        nu_max = cfg.contains("nu_max_hz") ? cfg["nu_max_hz"].get<double>() : 20.0 * scale;
    }
    if (!(nu_min > 0.0) || !(nu_max > nu_min) || points < 2) {
        gwf::fail_argument("frequency grid needs 0 < min < max and at least 2 points", "nu_grid");
    }
    CsvWriter csv({"nu_hz", "x", "u_erg_per_cm3_hz", "u_rayleigh_jeans", "u_wien"});
    double best_u = -1.0;
    double best_nu = 0.0;
    for (long long i = 0; i < points; ++i) {
        const double nu = nu_min + (nu_max - nu_min) * static_cast<double>(i) / static_cast<double>(points - 1);
        const double x = k.h() * nu / (k.k_B * T);
        const double u = gwf::planck_density(nu, T);
        const double pref = 8.0 * M_PI * nu * nu / (k.c * k.c * k.c);
        csv.cell(nu).cell(x).cell(u).cell(pref * k.k_B * T).cell(pref * k.h() * nu * std::exp(-x));
        csv.end_row();
        if (u > best_u) {
            best_u = u;
            best_nu = nu;
        }
    }
    ctx.write_text("planck.csv", csv.str());
    const double x_peak = gwf::planck_peak_x();
    ctx.write_json("summary.json", {{"T_K", T},
                                    {"peak_x", x_peak},
                                    {"peak_nu_hz", x_peak * k.k_B * T / k.h()},
                                    {"grid_peak_nu_hz", best_nu},
                                    {"total_energy_density_erg_per_cm3",
                                     8.0 * std::pow(M_PI, 5) * std::pow(k.k_B * T, 4) /
                                         (15.0 * std::pow(k.h() * k.c, 3))}});
    return 0;
}

int run_maxent(RunContext &ctx, const json &cfg) {
    const json &b = cfg["bands"];
    if (!b.is_array() || b.empty()) {
        gwf::fail_argument("bands must be a non-empty list", "bands");
    }
    std::vector<gwf::FrequencyBand> bands;
    for (std::size_t s = 0; s < b.size(); ++s) {
        const std::string where = "bands[" + std::to_string(s) + "]";
        check_keys(b[s], {"nu_hz", "d_nu_hz", "volume_cm3"}, where);
        bands.push_back(gwf::FrequencyBand::create(
            number(require(b[s], "nu_hz", where), where + ".nu_hz"),
            number(require(b[s], "d_nu_hz", where), where + ".d_nu_hz"),
            b[s].contains("volume_cm3") ? number(b[s]["volume_cm3"], where + ".volume_cm3") : 1.0));
    }
    const bool has_e = cfg.contains("E_target_erg");
    const bool has_t = cfg.contains("T_K");
    if (has_e == has_t) {
        gwf::fail_argument("exactly one of 'E_target_erg' and 'T_K' is required", "E_target_erg");
    }
    double E = 0.0;
    if (has_e) {
        E = cfg["E_target_erg"];
    } else {
        const double T = temperature(cfg);
        for (const auto &band : bands) {
            const double x = band.quantum() / (gwf::cgs().k_B * T);
            E += band.states() * band.quantum() / std::expm1(x);
        }
    }
    gwf::MaxEntOptions opts;
    const auto r_max = cfg["r_max"].get<long long>();
    if (r_max < 0) {
        gwf::fail_argument("r_max must be non-negative", "r_max");
    }
    opts.r_max = static_cast<std::size_t>(r_max);
    opts.tol = cfg["tol"];
    const auto res = gwf::maximize_entropy(bands, E, opts);

    CsvWriter csv({"band", "nu_hz", "r", "p_r", "p_r_geometric"});
    const double T_fit = res.state.beta / gwf::cgs().k_B;
    for (std::size_t s = 0; s < bands.size(); ++s) {
        const auto &row = res.table.p[s];
        const auto geo = gwf::geometric_occupancy(bands[s], T_fit, row.size() - 1);
        for (std::size_t r = 0; r < row.size(); ++r) {
            csv.cell(static_cast<long long>(s)).cell(bands[s].nu()).cell(static_cast<long long>(r));
            csv.cell(row[r]).cell(r < geo.size() ? geo[r] : 0.0);
            csv.end_row();
        }
    }
    ctx.write_text("occupancy.csv", csv.str());
    ctx.write_json("thermo.json", {{"E_target_erg", E},
                                   {"beta_erg", res.state.beta},
                                   {"T_K", T_fit},
                                   {"E_erg", res.state.E},
                                   {"S_erg_per_K", res.state.S_entropy},
                                   {"N_photons", res.state.N_photons},
                                   {"ln_W", res.table.ln_multiplicity()},
                                   {"bisection_steps", res.bisection_steps},
                                   {"inner_iterations", res.inner_iterations},
                                   {"kkt_residual", res.kkt_residual}});
    return 0;
}

int run_cmbr(RunContext &ctx, const json &cfg) {
    const double T = temperature(cfg);
    const double xi = cfg["xi"];
    const double vb = cfg["V_over_B_cm3_per_G"];
    const auto model = gwf::VacuumModel::create(T, cfg["omega_c_rad_per_s"].get<double>(), xi, vb);
    const double rho_exact = gwf::vacuum_energy(model, gwf::VacuumMethod::Exact);
    const double rho_qed = gwf::qed_vacuum_energy(gwf::cgs().omega_P);
    const double a_electron = gwf::cgs().alpha / (2.0 * M_PI);
    ctx.write_json("cmbr.json",
                   {{"T_K", T},
                    {"omega_c_rad_per_s", model.omega_c()},
                    {"cutoff_ratio", model.cutoff_ratio()},
                    {"rho_vac_exact_erg_per_cm3", rho_exact},
                    {"rho_vac_asymptotic_erg_per_cm3", gwf::vacuum_energy(model, gwf::VacuumMethod::Asymptotic)},
                    {"a_e_symbolic", gwf::anomalous_moment(model, gwf::MomentPath::Symbolic)},
                    {"a_e_numeric", gwf::anomalous_moment(model, gwf::MomentPath::Numeric)},
                    {"omega_c_for_alpha_over_2pi_numeric",
                     gwf::cutoff_for_moment(a_electron, gwf::MomentPath::Numeric, T, xi, vb)},
                    {"omega_c_for_alpha_over_2pi_symbolic",
                     gwf::cutoff_for_moment(a_electron, gwf::MomentPath::Symbolic, T, xi, vb)},
                    {"qed_comparison",
                     {{"cutoff_rad_per_s", gwf::cgs().omega_P},
                      {"rho_qed_erg_per_cm3", rho_qed},
                      {"observed_bound_erg_per_cm3", gwf::kObservedVacuumBound},
                      {"decades_qed_over_observed", std::log10(rho_qed / gwf::kObservedVacuumBound)},
                      {"decades_qed_over_empty_cell", std::log10(rho_qed / rho_exact)}}}});
    return 0;
}

int run_casimir(RunContext &ctx, const json &cfg) {
    const double T = temperature(cfg);
    const double a = cfg["a_cm"];
    const double p_target = cfg["target_pressure_dyn_per_cm2"];
    ctx.write_json("casimir.json",
                   {{"a_cm", a},
                    {"T_K", T},
                    {"pressure_dyn_per_cm2", gwf::casimir_pressure(a, T)},
                    {"coefficient", gwf::casimir_coefficient(T)},
                    {"reference_coefficient", gwf::kReferenceCasimirCoefficient},
                    {"target_pressure_dyn_per_cm2", p_target},
                    {"separation_for_target_cm", gwf::casimir_separation(p_target, T)},
                    {"derivative_consistency", gwf::casimir_derivative_consistency(a, T)}});
    return 0;
}

int run_check(RunContext &ctx, const json &cfg) {
    const long long only = cfg["criterion"];
    if (only < 0 || only > gwf::selfcheck::count()) {
        gwf::fail_argument("criterion must be 0 (all) or 1.." + std::to_string(gwf::selfcheck::count()),
                           "criterion");
    }
    std::vector<gwf::selfcheck::CriterionResult> results;
    if (only == 0) {
        for (int id = 1; id <= gwf::selfcheck::count(); ++id) {
            results.push_back(gwf::selfcheck::run(id));
            std::printf("%s\n", gwf::selfcheck::format_line(results.back()).c_str());
            std::fflush(stdout);
        }
    } else {
        results.push_back(gwf::selfcheck::run(static_cast<int>(only)));
        std::printf("%s\n", gwf::selfcheck::format_line(results.back()).c_str());
    }
    json rows = json::array();
    int passed = 0;
    for (const auto &r : results) {
        passed += r.passed ? 1 : 0;
        rows.push_back({{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"detail", r.detail},
                        {"seconds", r.seconds},
                        {"budget_seconds", r.budget_seconds}});
    }
    ctx.write_json("check.json", {{"passed", passed}, {"total", results.size()}, {"criteria", rows}});
    std::printf("%d of %zu criteria passed\n", passed, results.size());
    return passed == static_cast<int>(results.size()) ? 0 : 3;
}

}  // namespace

std::vector<Command> thermal_commands() {
    const json none;
    return {
        {"planck",
         "Planck spectral energy density on a frequency grid",
         {{"T_K", KeyType::Number, 2.7, false, "temperature, K", {"--T"}},
          {"nu_min_hz", KeyType::Number, none, false, "lowest frequency, Hz (default 0.01 kT/h)"},
          {"nu_max_hz", KeyType::Number, none, false, "highest frequency, Hz (default 20 kT/h)"},
          {"nu_points", KeyType::Integer, 512, false, "number of grid points"},
          {"nu_grid", KeyType::String, none, false, "MIN:MAX:N shorthand in Hz"}},
         run_planck},
        {"maxent",
         "Maximum-multiplicity occupancy table at fixed energy",
         {{"bands", KeyType::Json, none, true, "[{nu_hz, d_nu_hz, volume_cm3}]"},
          {"E_target_erg", KeyType::Number, none, false, "total energy, erg"},
          {"T_K", KeyType::Number, none, false, "set the energy from this temperature instead", {"--T"}},
          {"r_max", KeyType::Integer, 0, false, "occupancy rows per band, 0 for automatic"},
          {"tol", KeyType::Number, 1e-6, false, "relative tolerance on the energy"}},
         run_maxent},
        {"cmbr",
         "Empty-cell vacuum energy and the anomalous moment it implies",
         {{"T_K", KeyType::Number, 2.7, false, "temperature, K", {"--T"}},
          {"omega_c_rad_per_s", KeyType::Number, 2.87e9, false, "cutoff angular frequency, rad/s",
           {"--omega-c"}},
          {"xi", KeyType::Number, 1.0, false, "fraction of empty cells counted, 0 < xi <= 1"},
          {"V_over_B_cm3_per_G", KeyType::Number, 1.0, false, "volume per field strength, cm^3/G"}},
         run_cmbr},
        {"casimir",
         "Thermal-vacuum Casimir pressure between plates",
         {{"a_cm", KeyType::Number, 4e-5, false, "plate separation, cm", {"--a"}},
          {"T_K", KeyType::Number, 2.7, false, "temperature, K", {"--T"}},
          {"target_pressure_dyn_per_cm2", KeyType::Number, 1e9, false,
           "pressure magnitude whose separation is reported"}},
         run_casimir},
        {"check",
         "Run the built-in acceptance criteria",
         {{"criterion", KeyType::Integer, 0, false, "run only this criterion (0 for all)"}},
         run_check},
    };
}

}  // namespace gwfield_cli
