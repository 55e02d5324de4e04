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
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "gwfield/textio.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        std::random_device rd;
        dir_ = fs::temp_directory_path() / ("gwfield-cli-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(dir_);
    }
    void TearDown() override {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }

    RunResult run(const std::string &args) const {
        const auto out = dir_ / "stdout.txt";
        const auto err = dir_ / "stderr.txt";
        const std::string cmd = "cd '" + dir_.string() + "' && GWFIELD_OUTPUT_DIR='" +
                                (dir_ / "auto").string() + "' '" + GWFIELD_CLI_PATH + "' " + args +
                                " > '" + out.string() + "' 2> '" + err.string() + "'";
        const int status = std::system(cmd.c_str());
        RunResult r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

    fs::path write(const std::string &name, const std::string &body) const {
        const auto p = dir_ / name;
        std::ofstream(p) << body;
        return p;
    }

    json read_json(const fs::path &p) const {
        return json::parse(slurp(p));
    }

    fs::path dir_;
};

TEST_F(CliTest, VersionAndHelpExitZero) {
    const auto v = run("--version");
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("gwfield"), std::string::npos);
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("propagate --help").code, 0);
}

TEST_F(CliTest, MissingSubcommandIsUsageError) {
    EXPECT_EQ(run("").code, 2);
}

TEST_F(CliTest, UnknownFlagIsUsageError) {
    const auto r = run("cmbr --no-such-flag 1");
    EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, UnknownSpecKeyNamesTheKey) {
    const auto spec = write("s.json", R"({"T_K": 2.7, "temprature": 3})");
    const auto r = run("cmbr --spec " + spec.string());
    EXPECT_EQ(r.code, 2);
    const auto err = json::parse(r.err);
    EXPECT_EQ(err["code"], 2);
    EXPECT_NE(err["message"].get<std::string>().find("temprature"), std::string::npos);
}

TEST_F(CliTest, MalformedSpecIsInvalidArgument) {
    const auto spec = write("bad.json", "{\"T_K\": ");
    const auto r = run("cmbr --spec " + spec.string());
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);
}

TEST_F(CliTest, MissingSpecFileIsIoError) {
    EXPECT_EQ(run("cmbr --spec nope.json").code, 4);
}

TEST_F(CliTest, WrongValueTypeIsInvalidArgument) {
    EXPECT_EQ(run("casimir --a-cm banana").code, 2);
    const auto spec = write("s.json", R"({"a_cm": "4e-5"})");
    EXPECT_EQ(run("casimir --spec " + spec.string()).code, 2);
}

TEST_F(CliTest, MissingRequiredKeyIsInvalidArgument) {
    const auto r = run("madelung --omega-ref 1e11");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("field"), std::string::npos);
}

TEST_F(CliTest, DomainErrorIsInvalidArgument) {
    EXPECT_EQ(run("cmbr --T -1").code, 2);
    EXPECT_EQ(run("cmbr --xi 1.5").code, 2);
}

TEST_F(CliTest, ExistingOutputDirectoryIsIoErrorAndUntouched) {
    fs::create_directories(dir_ / "taken");
    write("taken/keep.txt", "keep");
    const auto r = run("casimir --out taken");
    EXPECT_EQ(r.code, 4);
    EXPECT_EQ(slurp(dir_ / "taken" / "keep.txt"), "keep");
    EXPECT_FALSE(fs::exists(dir_ / "taken" / "manifest.json"));
}

TEST_F(CliTest, FailedRunLeavesNoOutputDirectory) {
    EXPECT_EQ(run("cmbr --xi 2 --out failed").code, 2);
    EXPECT_FALSE(fs::exists(dir_ / "failed"));
}

TEST_F(CliTest, ManifestChecksumsMatchFiles) {
    ASSERT_EQ(run("planck --T 2.7 --nu-points 64 --out pl").code, 0);
    const auto manifest = read_json(dir_ / "pl" / "manifest.json");
    EXPECT_EQ(manifest["subcommand"], "planck");
    EXPECT_EQ(manifest["tool"], "gwfield");
    EXPECT_EQ(manifest["config"]["T_K"], 2.7);
    ASSERT_EQ(manifest["outputs"].size(), 2u);
    for (const auto &o : manifest["outputs"]) {
        const auto path = dir_ / "pl" / o["file"].get<std::string>();
        ASSERT_TRUE(fs::exists(path));
        EXPECT_EQ(o["sha256"], gwf::sha256_file(path));
    }
}

TEST_F(CliTest, DefaultDirectoriesAreDistinctAndDeterministic) {
    const auto a = run("casimir --a 5e-5");
    const auto b = run("casimir --a 5e-5");
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    const fs::path da = a.out.substr(0, a.out.find('\n'));
    const fs::path db = b.out.substr(0, b.out.find('\n'));
    EXPECT_NE(da, db);
    EXPECT_EQ(da.parent_path(), dir_ / "auto");
    EXPECT_EQ(db.filename().string(), da.filename().string() + "-2");
    EXPECT_EQ(slurp(da / "casimir.json"), slurp(db / "casimir.json"));
}

TEST_F(CliTest, MeasurementSamplingIsReproducible) {
    const auto spec = write("m.json", R"({"setup": {"eigenvalues": [0, 1, 2],
        "amplitudes": [0.5, [0, 0.5], 0.7071067811865476], "width_cm": 0.05,
        "coupling": 1.0, "tau_s": 1.0}, "trials": 20000, "seed": 7})");
    ASSERT_EQ(run("measure --spec " + spec.string() + " --out m1").code, 0);
    ASSERT_EQ(run("measure --spec " + spec.string() + " --out m2").code, 0);
    EXPECT_EQ(slurp(dir_ / "m1" / "frequencies.csv"), slurp(dir_ / "m2" / "frequencies.csv"));
    const auto rec = read_json(dir_ / "m1" / "record.json");
    EXPECT_TRUE(rec["resolved"].get<bool>());
    EXPECT_LT(rec["max_frequency_deviation"].get<double>(), 0.02);
    ASSERT_EQ(run("measure --spec " + spec.string() + " --seed 8 --out m3").code, 0);
    EXPECT_NE(slurp(dir_ / "m1" / "frequencies.csv"), slurp(dir_ / "m3" / "frequencies.csv"));
}

TEST_F(CliTest, PlanckPeakAndGridShorthand) {
    ASSERT_EQ(run("planck --T 3 --nu-grid 1e9:1e12:2000 --out pl").code, 0);
    const auto s = read_json(dir_ / "pl" / "summary.json");
    EXPECT_NEAR(s["peak_x"].get<double>(), 2.8214393721, 1e-8);
    const double h = 6.62607015e-27;
    const double k = 1.380649e-16;
    EXPECT_NEAR(s["grid_peak_nu_hz"].get<double>() * h / (k * 3.0), 2.8214, 2e-3);
    EXPECT_EQ(run("planck --nu-grid 1:2 --out bad").code, 2);
}

TEST_F(CliTest, CmbrAndCasimirReportExpectedScales) {
    ASSERT_EQ(run("cmbr --out c").code, 0);
    const auto c = read_json(dir_ / "c" / "cmbr.json");
    EXPECT_NEAR(c["a_e_numeric"].get<double>(), 1.1548e-3, 1e-6);
    EXPECT_NEAR(c["omega_c_for_alpha_over_2pi_numeric"].get<double>() / 2.87e9, 1.0, 0.01);
    const double exact = c["rho_vac_exact_erg_per_cm3"];
    const double asym = c["rho_vac_asymptotic_erg_per_cm3"];
    EXPECT_NEAR(exact / asym, 1.0, 0.01);
    EXPECT_NEAR(c["qed_comparison"]["decades_qed_over_observed"].get<double>(), 120.0, 2.0);

    ASSERT_EQ(run("casimir --a 4e-5 --out k").code, 0);
    const auto k = read_json(dir_ / "k" / "casimir.json");
    const double coeff = k["coefficient"];
    EXPECT_NEAR(k["pressure_dyn_per_cm2"].get<double>(), -coeff * std::pow(4e-5, -6), 1e-12 * coeff * std::pow(4e-5, -6));
    EXPECT_NEAR(k["separation_for_target_cm"].get<double>(), 6.5e-5, 0.03 * 6.5e-5);
    EXPECT_LT(k["derivative_consistency"].get<double>(), 1e-6);
}

TEST_F(CliTest, PropagateMadelungAndBohmChain) {
    const auto spec = write("p.json", R"({"equation": "schrodinger",
        "grid": {"n_points": [128], "length_cm": [10]},
        "packet": {"center_cm": [0], "sigma0_cm": 0.5, "k_carrier_rad_per_cm": [3]},
        "omega_ref_rad_per_s": 1e11, "times_s": [0, 5e-11]})");
    ASSERT_EQ(run("propagate --spec " + spec.string() + " --out prop").code, 0);
    EXPECT_TRUE(fs::exists(dir_ / "prop" / "field_0001.csv"));
    EXPECT_TRUE(fs::exists(dir_ / "prop" / "field_0001.json"));
    std::ifstream summary(dir_ / "prop" / "summary.csv");
    std::string header, row0, row1;
    std::getline(summary, header);
    std::getline(summary, row0);
    std::getline(summary, row1);
    EXPECT_EQ(header, "t_s,norm,width_cm,energy");
    const auto norm_of = [](const std::string &row) {
        return std::stod(row.substr(row.find(',') + 1));
    };
    EXPECT_NEAR(norm_of(row1), norm_of(row0), 1e-12 * norm_of(row0));

    ASSERT_EQ(run("madelung --field prop/field_0001.csv --omega-ref 1e11 --out mad").code, 0);
    const auto m = read_json(dir_ / "mad" / "summary.json");
    EXPECT_EQ(m["masked_points"], 0);
    EXPECT_LT(m["residuals"]["gradient_energy_split"].get<double>(), 1e-10);
    EXPECT_NEAR(m["E_erg"].get<double>(),
                m["kinetic_phase_erg"].get<double>() + m["Q_mean_erg"].get<double>() +
                    m["potential_mean_erg"].get<double>(),
                1e-9 * m["E_erg"].get<double>());

    const auto seeds = write("b.json", R"({"seeds": [{"x_cm": [0.2]}, {"x_cm": [-0.3], "p_g_cm_per_s": [1e-30]}]})");
    ASSERT_EQ(run("bohm --field prop/field_0000.csv --omega-ref 1e11 --dt-s 1e-13 --steps 20 --spec " +
                  seeds.string() + " --out bohm")
                  .code,
              0);
    const auto b = read_json(dir_ / "bohm" / "summary.json");
    ASSERT_EQ(b["trajectories"].size(), 2u);
    EXPECT_EQ(b["trajectories"][0]["status"], "ok");
    EXPECT_EQ(b["trajectories"][0]["states"], 21);
}

TEST_F(CliTest, HelicitySplitsOneWayWave) {
    const double c = 2.99792458e10;
    const double k = 2.0 * M_PI / 10.0;
    const double dt = 2.0 * M_PI / (c * k) / 16.0;
    json spec{{"equation", "wave"},
              {"grid", {{"n_points", {64}}, {"length_cm", {10.0}}}},
              {"planewave", {{"k_rad_per_cm", {k}}}},
              {"times_s", json::array()}};
    for (int n = 0; n < 16; ++n) {
        spec["times_s"].push_back(n * dt);
    }
    const auto p = write("w.json", spec.dump());
    ASSERT_EQ(run("propagate --spec " + p.string() + " --out wave").code, 0);
    std::ostringstream args;
    args.precision(17);
    args << "helicity --snapshots wave --dt-s " << dt << " --k0 " << k << " --out hel";
    ASSERT_EQ(run(args.str()).code, 0);
    const auto h = read_json(dir_ / "hel" / "helicity.json");
    const double total = h["norm_plus"].get<double>() + h["norm_minus"].get<double>();
    EXPECT_LT(std::min(h["norm_plus"].get<double>(), h["norm_minus"].get<double>()), 1e-12 * total);
    EXPECT_LT(h["reconstruction_error"].get<double>(), 1e-12);
    EXPECT_EQ(h["snapshots"], 16);
}

TEST_F(CliTest, SchmidtAndUpdate) {
    write("bell.csv", "row,col,re,im\n0,0,0.7071067811865476,0\n1,1,0.7071067811865476,0\n");
    ASSERT_EQ(run("schmidt --amplitudes-csv bell.csv --out s").code, 0);
    const auto s = read_json(dir_ / "s" / "schmidt.json");
    EXPECT_EQ(s["rank"], 2);
    EXPECT_TRUE(s["entangled"].get<bool>());
    EXPECT_LT(s["reconstruction_error"].get<double>(), 1e-12);

    const auto u = write("u.json", R"({"rho": {"pure": [0.6, 0.8]}, "rule": "luders", "outcome": 0})");
    ASSERT_EQ(run("update --spec " + u.string() + " --out u").code, 0);
    const auto up = read_json(dir_ / "u" / "update.json");
    EXPECT_NEAR(up["probability"].get<double>(), 0.36, 1e-12);
    EXPECT_NEAR(up["rho"][0][0][0].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(run("update --spec " + u.string() + " --outcome 5 --out u2").code, 2);
}

TEST_F(CliTest, MaxentRecoversTemperature) {
    const auto spec = write("b.json", R"({"bands": [{"nu_hz": 5e10, "d_nu_hz": 2.5e9},
        {"nu_hz": 1e11, "d_nu_hz": 5e9}]})");
    ASSERT_EQ(run("maxent --spec " + spec.string() + " --T 2.7 --out mx").code, 0);
    const auto t = read_json(dir_ / "mx" / "thermo.json");
    EXPECT_NEAR(t["T_K"].get<double>(), 2.7, 1e-6);
    EXPECT_EQ(run("maxent --spec " + spec.string() + " --out none").code, 2);
}

TEST_F(CliTest, CheckRunsOneCriterion) {
    const auto r = run("check --criterion 7 --out ck");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS [7]"), std::string::npos);
    const auto j = read_json(dir_ / "ck" / "check.json");
    EXPECT_EQ(j["passed"], 1);
}

}  // namespace
