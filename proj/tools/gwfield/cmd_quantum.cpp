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
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "gwfield/error.hpp"
#include "gwfield/hybridmeas.hpp"
#include "gwfield/statequant.hpp"

namespace gwfield_cli {

namespace {

// Rows of "row,col,re,im"; a leading non-numeric line is taken as a header.
gwf::CMatrix read_amplitude_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        gwf::fail_io("cannot open amplitude file", path);
    }
    struct Entry {
        long long r, c;
        double re, im;
    };
    std::vector<Entry> entries;
    std::string line;
    std::size_t line_no = 0;
    long long rows = 0;
    long long cols = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        std::istringstream ls(line);
        Entry e{};
        char c1 = 0, c2 = 0, c3 = 0;
        if (!(ls >> e.r >> c1 >> e.c >> c2 >> e.re >> c3 >> e.im) || c1 != ',' || c2 != ',' || c3 != ',') {
            if (line_no == 1 && entries.empty()) {
                continue;
            }
            gwf::fail_io("malformed amplitude row " + std::to_string(line_no), path);
        }
        if (e.r < 0 || e.c < 0 || !std::isfinite(e.re) || !std::isfinite(e.im)) {
            gwf::fail_io("invalid amplitude row " + std::to_string(line_no), path);
        }
        rows = std::max(rows, e.r + 1);
        cols = std::max(cols, e.c + 1);
        entries.push_back(e);
    }
    if (entries.empty()) {
        gwf::fail_argument("amplitude file holds no entries", path);
    }
    gwf::CMatrix m = gwf::CMatrix::Zero(rows, cols);
    for (const auto &e : entries) {
        m(e.r, e.c) += std::complex<double>(e.re, e.im);
    }
    return m;
}

int run_schmidt(RunContext &ctx, const json &cfg) {
    const bool has_csv = cfg.contains("amplitudes_csv");
    const bool has_inline = cfg.contains("amplitudes");
    if (has_csv == has_inline) {
        gwf::fail_argument("exactly one of 'amplitudes_csv' and 'amplitudes' is required", "amplitudes");
    }
    const gwf::CMatrix c = has_csv ? read_amplitude_csv(cfg["amplitudes_csv"].get<std::string>())
                                   : complex_matrix(cfg["amplitudes"], "amplitudes");
    const auto r = gwf::schmidt_decompose(c, cfg["tau_rel"].get<double>(), cfg["normalize"].get<bool>());
    const gwf::CMatrix target = cfg["normalize"].get<bool>() ? gwf::CMatrix(c / c.norm()) : c;
    ctx.write_json("schmidt.json", {{"coefficients", r.coefficients},
                                    {"rank", r.rank},
                                    {"entangled", r.entangled()},
                                    {"threshold", r.threshold},
                                    {"left", matrix_to_json(r.left)},
                                    {"right", matrix_to_json(r.right)},
                                    {"reconstruction_error", (r.reconstruct() - target).norm()}});
    return 0;
}

gwf::DensityMatrix density_from(const json &v) {
    if (v.is_object()) {
        check_keys(v, {"pure"}, "rho");
        return gwf::DensityMatrix::pure(
            Eigen::Map<const gwf::CVector>(complex_list(require(v, "pure", "rho"), "rho.pure").data(),
                                           static_cast<Eigen::Index>(v["pure"].size())));
    }
    return gwf::DensityMatrix::from_matrix(complex_matrix(v, "rho"));
}

gwf::ProjectorSet projectors_from(const json &v, Eigen::Index dim) {
    if (v.is_string()) {
        if (v.get<std::string>() != "computational") {
            gwf::fail_argument("projectors must be 'computational', {basis: U} or a list of matrices",
                               "projectors");
        }
        return gwf::ProjectorSet::computational(dim);
    }
    if (v.is_object()) {
        check_keys(v, {"basis"}, "projectors");
        return gwf::ProjectorSet::from_basis(complex_matrix(require(v, "basis", "projectors"), "projectors.basis"));
    }
    if (!v.is_array() || v.empty()) {
        gwf::fail_argument("projectors must be 'computational', {basis: U} or a list of matrices",
                           "projectors");
    }
    std::vector<gwf::CMatrix> ps;
    for (std::size_t k = 0; k < v.size(); ++k) {
        ps.push_back(complex_matrix(v[k], "projectors[" + std::to_string(k) + "]"));
    }
    return gwf::ProjectorSet::create(std::move(ps));
}

int run_update(RunContext &ctx, const json &cfg) {
    const auto rho = density_from(cfg["rho"]);
    const auto proj = projectors_from(cfg["projectors"], rho.dim());
    if (proj.dim() != rho.dim()) {
        gwf::fail_argument("projector dimension does not match the state", "projectors");
    }
    const std::string rule = cfg["rule"];
    json out{{"rule", rule}, {"probabilities", gwf::outcome_probabilities(rho, proj)}};
    if (rule == "luders") {
        if (!cfg.contains("outcome")) {
            gwf::fail_argument("missing required key 'outcome'", "outcome");
        }
        const long long k = cfg["outcome"].get<long long>();
        if (k < 0 || static_cast<std::size_t>(k) >= proj.size()) {
            gwf::fail_argument("outcome index out of range", "outcome");
        }
        const auto r = gwf::luders_update(rho, proj, static_cast<std::size_t>(k));
        out["outcome"] = k;
        out["probability"] = r.probability;
        out["rho"] = matrix_to_json(r.state.matrix());
        out["purity"] = r.state.purity();
    } else if (rule == "vonneumann") {
        const auto r = gwf::von_neumann_update(rho, proj);
        out["rho"] = matrix_to_json(r.matrix());
        out["purity"] = r.purity();
    } else {
        gwf::fail_argument("rule must be 'luders' or 'vonneumann'", "rule");
    }
    out["purity_before"] = rho.purity();
    ctx.write_json("update.json", out);
    return 0;
}

int run_measure(RunContext &ctx, const json &cfg) {
    const json &s = cfg["setup"];
    check_keys(s, {"eigenvalues", "amplitudes", "y0_cm", "width_cm", "coupling", "tau_s"}, "setup");
    const auto setup = gwf::MeasurementSetup::create(
        numbers(require(s, "eigenvalues", "setup"), "setup.eigenvalues"),
        complex_list(require(s, "amplitudes", "setup"), "setup.amplitudes"),
        s.contains("y0_cm") ? number(s["y0_cm"], "setup.y0_cm") : 0.0,
        number(require(s, "width_cm", "setup"), "setup.width_cm"),
        number(require(s, "coupling", "setup"), "setup.coupling"),
        number(require(s, "tau_s", "setup"), "setup.tau_s"));
    const auto record = gwf::run_measurement(setup);
    const auto trials = cfg["trials"].get<long long>();
    if (trials < 1) {
        gwf::fail_argument("trials must be at least 1", "trials");
    }
    const auto seed = cfg["seed"].get<long long>();
    if (seed < 0) {
        gwf::fail_argument("seed must be non-negative", "seed");
    }
    const auto table = gwf::sample_outcomes(record, static_cast<std::uint64_t>(trials),
                                            static_cast<std::uint64_t>(seed));
    json overlaps = json::array();
    for (Eigen::Index i = 0; i < record.overlap_matrix.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < record.overlap_matrix.cols(); ++j) {
            row.push_back(record.overlap_matrix(i, j));
        }
        overlaps.push_back(row);
    }
    ctx.write_json("record.json",
                   {{"eigenvalues", record.eigenvalues},
                    {"pointer_positions_cm", record.pointer_positions},
                    {"weights", record.weights},
                    {"overlap_matrix", overlaps},
                    {"resolved", record.resolved},
                    {"reduced_state", matrix_to_json(gwf::partial_trace_system(record).matrix())},
                    {"coherent_reduced_state", matrix_to_json(gwf::coherent_reduced_state(record).matrix())},
                    {"max_frequency_deviation", table.max_deviation}});
    CsvWriter csv({"outcome", "eigenvalue", "weight", "count", "frequency"});
    for (std::size_t p = 0; p < table.counts.size(); ++p) {
        csv.cell(static_cast<long long>(p)).cell(record.eigenvalues[p]).cell(record.weights[p]);
        csv.cell(static_cast<long long>(table.counts[p])).cell(table.frequencies[p]);
        csv.end_row();
    }
    ctx.write_text("frequencies.csv", csv.str());
    return 0;
}

}  // namespace

std::vector<Command> quantum_commands() {
    const json none;
    return {
        {"schmidt",
         "Schmidt decomposition of a bipartite amplitude matrix",
         {{"amplitudes_csv", KeyType::String, none, false, "CSV of row,col,re,im"},
          {"amplitudes", KeyType::Json, none, false, "inline matrix, rows of numbers or [re, im]"},
          {"tau_rel", KeyType::Number, 1e-10, false, "relative cutoff for coefficients"},
          {"normalize", KeyType::Bool, false, false, "rescale to unit norm first"}},
         run_schmidt},
        {"update",
         "Luders or von Neumann state update",
         {{"rho", KeyType::Json, none, true, "density matrix rows, or {pure: [amplitudes]}"},
          {"projectors", KeyType::Json, "computational", false,
           "'computational', {basis: U} or a list of projector matrices"},
          {"rule", KeyType::String, "luders", false, "luders | vonneumann"},
          {"outcome", KeyType::Integer, none, false, "outcome index for the luders rule"}},
         run_update},
        {"measure",
         "Pointer-coupled measurement record and sampled frequencies",
         {{"setup", KeyType::Json, none, true,
           "{eigenvalues, amplitudes, y0_cm, width_cm, coupling, tau_s}"},
          {"trials", KeyType::Integer, 100000, false, "number of sampled outcomes"},
          {"seed", KeyType::Integer, 2026, false, "RNG seed"}},
         run_measure},
    };
}

}  // namespace gwfield_cli
