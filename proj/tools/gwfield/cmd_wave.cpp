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


#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "commands.hpp"
#include "gwfield/cmbrvac.hpp"
#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"
#include "gwfield/helicity.hpp"
#include "gwfield/madelung.hpp"
#include "gwfield/textio.hpp"
#include "gwfield/wavemech.hpp"

namespace gwfield_cli {

namespace {

namespace fs = std::filesystem;

std::string field_name(const char *prefix, std::size_t n) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s_%04zu.csv", prefix, n);
    return buf;
}

gwf::ComplexField initial_field(const json &cfg, const gwf::Grid &grid, double mu) {
    const bool has_packet = cfg.contains("packet");
    const bool has_plane = cfg.contains("planewave");
    if (has_packet == has_plane) {
        gwf::fail_argument("exactly one of 'packet' and 'planewave' is required", "packet");
    }
    if (has_packet) {
        const json &p = cfg["packet"];
        check_keys(p, {"center_cm", "sigma0_cm", "k_carrier_rad_per_cm", "amplitude"}, "packet");
        gwf::GaussianPacketSpec spec{numbers(require(p, "center_cm", "packet"), "packet.center_cm"),
                                     number(require(p, "sigma0_cm", "packet"), "packet.sigma0_cm"),
                                     std::vector<double>(static_cast<std::size_t>(grid.dim()), 0.0),
                                     {1.0, 0.0}};
        if (p.contains("k_carrier_rad_per_cm")) {
            spec.k_carrier = numbers(p["k_carrier_rad_per_cm"], "packet.k_carrier_rad_per_cm");
        }
        if (p.contains("amplitude")) {
            spec.amplitude = complex_value(p["amplitude"], "packet.amplitude");
        }
        return gwf::make_gaussian_packet(spec, grid);
    }
    const json &w = cfg["planewave"];
    check_keys(w, {"k_rad_per_cm", "amplitude"}, "planewave");
    const auto amp = w.contains("amplitude") ? complex_value(w["amplitude"], "planewave.amplitude")
                                             : std::complex<double>{1.0, 0.0};
    const auto spec = gwf::PlaneWaveSpec::on_shell(
        amp, numbers(require(w, "k_rad_per_cm", "planewave"), "planewave.k_rad_per_cm"), mu);
    return gwf::make_plane_wave(spec, grid, 0.0);
}

// Empty cell when the density has no well-defined centre (plane waves).
void width_cell(CsvWriter &csv, const gwf::ComplexField &psi) {
    try {
        csv.cell(gwf::packet_width(psi));
    } catch (const gwf::Error &e) {
        if (e.kind() != gwf::ErrorKind::Numerical) {
            throw;
        }
        csv.cell(std::string());
    }
}

int run_propagate(RunContext &ctx, const json &cfg) {
    const std::string equation = cfg["equation"];
    if (equation != "wave" && equation != "schrodinger") {
        gwf::fail_argument("equation must be 'wave' or 'schrodinger'", "equation");
    }
    const gwf::Grid grid = gwf::grid_from_json(cfg["grid"]);
    const double mu = cfg["mu_per_cm"];
    const auto times = cfg["times_s"].get<std::vector<double>>();
    if (times.empty()) {
        gwf::fail_argument("times_s must not be empty", "times_s");
    }
    const auto psi0 = initial_field(cfg, grid, mu);
    CsvWriter summary({"t_s", "norm", "width_cm", "energy"});

    if (equation == "schrodinger") {
        if (!cfg.contains("omega_ref_rad_per_s")) {
            gwf::fail_argument("missing required key 'omega_ref_rad_per_s'", "omega_ref_rad_per_s");
        }
        const auto params = gwf::EffectiveMassParams::from_reference_frequency(
            cfg["omega_ref_rad_per_s"].get<double>(), mu);
        for (std::size_t n = 0; n < times.size(); ++n) {
            const auto psi = gwf::evolve_schrodinger(psi0, params, times[n]);
            ctx.write_field(field_name("field", n), psi, {{"t_s", times[n]}, {"equation", equation}});
            summary.cell(times[n]).cell(psi.norm_squared());
            width_cell(summary, psi);
            summary.cell(gwf::schrodinger_energy(psi, params));
            summary.end_row();
        }
    } else {
        const std::string init = cfg["initial_velocity"];
        const int axis = cfg["one_way_axis"].get<int>();
        gwf::ClassicalWaveState state = [&] {
            if (init == "one_way") {
                return gwf::one_way_state(psi0, axis);
            }
            if (init == "zero") {
                return gwf::ClassicalWaveState(psi0, psi0.scaled(0.0));
            }
            gwf::fail_argument("initial_velocity must be 'one_way' or 'zero'", "initial_velocity");
        }();
        for (std::size_t n = 0; n < times.size(); ++n) {
            const auto s = gwf::evolve_classical_wave(state, mu, times[n]);
            ctx.write_field(field_name("field", n), s.psi, {{"t_s", times[n]}, {"equation", equation}});
            ctx.write_field(field_name("field_dot", n), s.psi_dot,
                            {{"t_s", times[n]}, {"equation", equation}, {"quantity", "psi_dot"}});
            summary.cell(times[n]).cell(s.psi.norm_squared());
            width_cell(summary, s.psi);
            summary.cell(gwf::wave_energy(s, mu));
            summary.end_row();
        }
    }
    ctx.write_text("summary.csv", summary.str());
    return 0;
}

gwf::EffectiveMassParams params_from(const json &cfg) {
    return gwf::EffectiveMassParams::from_reference_frequency(cfg["omega_ref_rad_per_s"].get<double>(),
                                                              cfg["mu_per_cm"].get<double>());
}

int run_madelung(RunContext &ctx, const json &cfg) {
    const auto dump = gwf::read_field(cfg["field"].get<std::string>());
    const auto &psi = dump.field;
    const auto &grid = psi.grid();
    const auto params = params_from(cfg);
    const auto form = gwf::polar_decompose(psi);
    const auto qf = gwf::quantum_potential(form, params.m_star);
    const double hbar = gwf::cgs().hbar;

    auto header = coordinate_header(grid);
    for (const char *h : {"rho", "S_erg_s", "Q_erg", "defect_per_cm2", "masked"}) {
        header.emplace_back(h);
    }
    CsvWriter csv(header);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        write_point(csv, grid, i);
        csv.cell(form.rho[i]).cell(hbar * form.phase[i]).cell(qf.Q[i]).cell(qf.classicality_defect[i]);
        csv.cell(static_cast<long long>(form.masked[i] ? 1 : 0));
        csv.end_row();
    }
    ctx.write_text("madelung.csv", csv.str());

    const auto e = gwf::energy_decomposition(psi, params);
    const double k2 = params.k0 * params.k0 - params.mu * params.mu;
    json summary{{"E_erg", e.E},
                 {"pc_erg", e.pc},
                 {"Q_mean_erg", e.Q_mean},
                 {"pc_phase_erg", e.pc_phase},
                 {"kinetic_phase_erg", e.kinetic_phase},
                 {"potential_mean_erg", e.potential_mean},
                 {"momentum_discrepancy", e.momentum_discrepancy},
                 {"masked_points", grid.size() - form.unmasked_count()},
                 {"unwrap_breaks", form.unwrap_breaks},
                 {"m_star_g", params.m_star}};
    json residuals = json::object();
    if (k2 > 0.0) {
        residuals["helmholtz"] = gwf::helmholtz_residual(psi, std::sqrt(k2));
    }
    residuals["gradient_energy_split"] = gwf::magnetic_energy_identity_check(psi, params).residual;
    summary["residuals"] = residuals;
    ctx.write_json("summary.json", summary);
    return 0;
}

const char *status_name(gwf::BohmStatus s) {
    switch (s) {
        case gwf::BohmStatus::Ok:
            return "ok";
        case gwf::BohmStatus::EnteredMaskedRegion:
            return "entered_masked_region";
        case gwf::BohmStatus::UndefinedDirection:
            return "undefined_direction";
    }
    return "unknown";
}

int run_bohm(RunContext &ctx, const json &cfg) {
    const auto dump = gwf::read_field(cfg["field"].get<std::string>());
    const auto &grid = dump.field.grid();
    const auto params = params_from(cfg);
    const std::string regime_name = cfg["regime"];
    gwf::BohmRegime regime;
    if (regime_name == "massless") {
        regime = gwf::BohmRegime::Massless;
    } else if (regime_name == "massive") {
        regime = gwf::BohmRegime::Massive;
    } else if (regime_name == "classical") {
        regime = gwf::BohmRegime::Classical;
    } else {
        gwf::fail_argument("regime must be 'massless', 'massive' or 'classical'", "regime");
    }
    const double dt = cfg["dt_s"];
    const auto steps = cfg["steps"].get<long long>();
    if (!(dt > 0.0) || steps < 1) {
        gwf::fail_argument("dt_s must be positive and steps at least 1", "dt_s");
    }
    const json &seeds = cfg["seeds"];
    if (!seeds.is_array() || seeds.empty()) {
        gwf::fail_argument("seeds must be a non-empty list", "seeds");
    }
    const auto qf = gwf::quantum_potential(gwf::polar_decompose(dump.field), params.m_star);

    std::vector<std::string> header{"seed", "step", "t_s"};
    for (int a = 0; a < grid.dim(); ++a) {
        header.push_back("x" + std::to_string(a) + "_cm");
    }
    for (int a = 0; a < grid.dim(); ++a) {
        header.push_back("p" + std::to_string(a) + "_g_cm_per_s");
    }
    CsvWriter csv(header);
    json statuses = json::array();
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        const std::string where = "seeds[" + std::to_string(s) + "]";
        check_keys(seeds[s], {"x_cm", "p_g_cm_per_s"}, where);
        const auto x = numbers(require(seeds[s], "x_cm", where), where + ".x_cm");
        const auto p = seeds[s].contains("p_g_cm_per_s")
                           ? numbers(seeds[s]["p_g_cm_per_s"], where + ".p_g_cm_per_s")
                           : std::vector<double>(static_cast<std::size_t>(grid.dim()), 0.0);
        if (x.size() != static_cast<std::size_t>(grid.dim()) || p.size() != x.size()) {
            gwf::fail_argument("seed position and momentum need one entry per axis", where);
        }
        gwf::BohmState start;
        std::copy(x.begin(), x.end(), start.x.begin());
        std::copy(p.begin(), p.end(), start.p.begin());
        const auto traj = gwf::integrate_trajectory(start, qf, dt, static_cast<std::size_t>(steps), regime);
        for (std::size_t n = 0; n < traj.states.size(); ++n) {
            const auto &st = traj.states[n];
            csv.cell(static_cast<long long>(s)).cell(static_cast<long long>(n)).cell(st.t);
            for (int a = 0; a < grid.dim(); ++a) {
                csv.cell(st.x[a]);
            }
            for (int a = 0; a < grid.dim(); ++a) {
                csv.cell(st.p[a]);
            }
            csv.end_row();
        }
        statuses.push_back({{"seed", s},
                            {"status", status_name(traj.status)},
                            {"states", traj.states.size()}});
    }
    ctx.write_text("trajectories.csv", csv.str());
    ctx.write_json("summary.json", {{"regime", regime_name}, {"trajectories", statuses}});
    return 0;
}

int run_helicity(RunContext &ctx, const json &cfg) {
    const fs::path dir = cfg["snapshots"].get<std::string>();
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        gwf::fail_io("snapshot directory not found", dir.string());
    }
    const std::string prefix = cfg["prefix"];
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        const std::string stem = entry.path().stem().string();
        if (!entry.is_regular_file() || entry.path().extension() != ".csv" ||
            stem.size() <= prefix.size() || stem.compare(0, prefix.size(), prefix) != 0) {
            continue;
        }
        const std::string rest = stem.substr(prefix.size());
        if (std::all_of(rest.begin(), rest.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<gwf::ComplexField> snaps;
    for (const auto &f : files) {
        snaps.push_back(gwf::read_field(f).field);
    }
    if (snaps.empty()) {
        gwf::fail_argument("snapshot directory holds no field dumps", "snapshots");
    }
    const double dt = cfg["dt_s"];
    const double k0 = cfg["k0_rad_per_cm"];
    const gwf::TimeSeriesField series(std::move(snaps), dt);
    const auto waves = gwf::partial_wave_split(series);
    const double continuity = gwf::current_continuity(series, k0);
    const double cross = gwf::cross_current_average(waves, series);
    ctx.write_json("helicity.json", {{"norm_plus", waves.power_plus},
                                     {"norm_minus", waves.power_minus},
                                     {"reconstruction_error", waves.reconstruction_error},
                                     {"common_period_snapshots", waves.common_period},
                                     {"continuity_residual", continuity},
                                     {"cross_current_average", cross},
                                     {"snapshots", series.size()}});

    const auto &grid = series.grid();
    const auto total = gwf::convection_current(series[0], k0);
    const auto plus = gwf::convection_current(waves.plus[0], k0);
    const auto minus = gwf::convection_current(waves.minus[0], k0);
    auto header = coordinate_header(grid);
    for (const char *tag : {"j", "j_plus", "j_minus"}) {
        for (int a = 0; a < grid.dim(); ++a) {
            header.push_back(std::string(tag) + std::to_string(a));
        }
    }
    header.emplace_back("rho_t");
    CsvWriter csv(header);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        write_point(csv, grid, i);
        for (const auto *cur : {&total, &plus, &minus}) {
            for (int a = 0; a < grid.dim(); ++a) {
                csv.cell(cur->j[a][i]);
            }
        }
        csv.cell(total.rho_t[i]);
        csv.end_row();
    }
    ctx.write_text("currents.csv", csv.str());
    return 0;
}

}  // namespace

std::vector<std::string> coordinate_header(const gwf::Grid &grid) {
    std::vector<std::string> h;
    for (int a = 0; a < grid.dim(); ++a) {
        h.push_back("x" + std::to_string(a) + "_cm");
    }
    return h;
}

void write_point(CsvWriter &csv, const gwf::Grid &grid, std::size_t i) {
    const auto idx = grid.unravel(i);
    for (int a = 0; a < grid.dim(); ++a) {
        csv.cell(grid.coordinate(a, idx[a]));
    }
}

std::vector<Command> wave_commands() {
    const json none;
    return {
        {"propagate",
         "Evolve a packet or plane wave under the wave or Schrodinger-like equation",
         {{"equation", KeyType::String, none, true, "wave | schrodinger"},
          {"grid", KeyType::Json, none, true, "{n_points, length_cm}"},
          {"packet", KeyType::Json, none, false, "{center_cm, sigma0_cm, k_carrier_rad_per_cm, amplitude}"},
          {"planewave", KeyType::Json, none, false, "{k_rad_per_cm, amplitude}"},
          {"mu_per_cm", KeyType::Number, 0.0, false, "mass parameter mu, 1/cm"},
          {"omega_ref_rad_per_s", KeyType::Number, none, false, "reference angular frequency, rad/s",
           {"--omega-ref"}},
          {"times_s", KeyType::NumberList, none, true, "output times, s (comma separated)"},
          {"initial_velocity", KeyType::String, "one_way", false, "wave equation: one_way | zero"},
          {"one_way_axis", KeyType::Integer, 0, false, "axis of one-way propagation"}},
         run_propagate},
        {"madelung",
         "Polar decomposition, quantum potential and energy split of a field dump",
         {{"field", KeyType::String, none, true, "field dump CSV"},
          {"omega_ref_rad_per_s", KeyType::Number, none, true, "reference angular frequency, rad/s",
           {"--omega-ref"}},
          {"mu_per_cm", KeyType::Number, 0.0, false, "mass parameter mu, 1/cm"}},
         run_madelung},
        {"bohm",
         "Trajectories guided by the quantum potential of a field dump",
         {{"field", KeyType::String, none, true, "field dump CSV"},
          {"omega_ref_rad_per_s", KeyType::Number, none, true, "reference angular frequency, rad/s",
           {"--omega-ref"}},
          {"mu_per_cm", KeyType::Number, 0.0, false, "mass parameter mu, 1/cm"},
          {"regime", KeyType::String, "massive", false, "massless | massive | classical"},
          {"dt_s", KeyType::Number, none, true, "time step, s"},
          {"steps", KeyType::Integer, none, true, "number of RK4 steps"},
          {"seeds", KeyType::Json, none, true, "[{x_cm: [...], p_g_cm_per_s: [...]}]"}},
         run_bohm},
        {"helicity",
         "Signed-frequency split and currents of a snapshot series",
         {{"snapshots", KeyType::String, none, true, "directory of field dumps, time-ordered by name"},
          {"prefix", KeyType::String, "field_", false, "dump name prefix; the rest of the stem must be digits"},
          {"dt_s", KeyType::Number, none, true, "snapshot spacing, s"},
          {"k0_rad_per_cm", KeyType::Number, none, true, "reference wavenumber, rad/cm", {"--k0"}}},
         run_helicity},
    };
}

}  // namespace gwfield_cli
