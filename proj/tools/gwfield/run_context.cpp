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


#include "run_context.hpp"

#include <cstdlib>
#include <fstream>

#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"
#include "gwfield/textio.hpp"

namespace gwfield_cli {

namespace fs = std::filesystem;

RunContext::RunContext(std::string subcommand, nlohmann::json config, const std::string &out)
    : subcommand_(std::move(subcommand)), config_(std::move(config)),
      start_(std::chrono::steady_clock::now()) {
    std::error_code ec;
    if (!out.empty()) {
        dir_ = out;
        if (fs::exists(dir_, ec)) {
            gwf::fail_io("output directory already exists", dir_.string());
        }
    } else {
        const char *env = std::getenv("GWFIELD_OUTPUT_DIR");
        const fs::path root = (env != nullptr && *env != '\0') ? fs::path(env) : fs::path("gwfield-out");
        const std::string base =
            subcommand_ + "-" + gwf::sha256_hex(subcommand_ + "\n" + config_.dump()).substr(0, 8);
        dir_ = root / base;
        for (int n = 2; fs::exists(dir_, ec); ++n) {
            if (n > 10000) {
                gwf::fail_io("no free output directory name", (root / base).string());
            }
            dir_ = root / (base + "-" + std::to_string(n));
        }
    }
    fs::create_directories(dir_, ec);
    if (ec) {
        gwf::fail_io("cannot create output directory: " + ec.message(), dir_.string());
    }
}

void RunContext::add(const fs::path &p) {
    files_.push_back(p);
}

void RunContext::write_text(const std::string &name, const std::string &body) {
    const fs::path p = dir_ / name;
    std::ofstream f(p, std::ios::binary);
    f << body;
    f.close();
    if (!f) {
        gwf::fail_io("cannot write output file", p.string());
    }
    add(p);
}

void RunContext::write_json(const std::string &name, const nlohmann::json &body) {
    write_text(name, body.dump(2) + "\n");
}

void RunContext::write_field(const std::string &name, const gwf::ComplexField &psi,
                             const nlohmann::json &extra) {
    const fs::path p = dir_ / name;
    gwf::write_field(psi, p, extra);
    add(p);
    add(gwf::sidecar_path(p));
}

fs::path RunContext::finish() {
    nlohmann::json outputs = nlohmann::json::array();
    for (const auto &f : files_) {
        outputs.push_back({{"file", fs::relative(f, dir_).generic_string()},
                           {"sha256", gwf::sha256_file(f)}});
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const nlohmann::json manifest{{"tool", "gwfield"},
                                  {"version", GWFIELD_VERSION},
                                  {"subcommand", subcommand_},
                                  {"config", config_},
                                  {"constants_checksum", gwf::constants_checksum()},
                                  {"wall_time_s", wall},
                                  {"outputs", outputs}};
    const fs::path p = dir_ / "manifest.json";
    std::ofstream f(p, std::ios::binary);
    f << manifest.dump(2) << "\n";
    f.close();
    if (!f) {
        gwf::fail_io("cannot write manifest", p.string());
    }
    return p;
}

CsvWriter::CsvWriter(std::vector<std::string> header) {
    for (const auto &h : header) {
        cell(h);
    }
    end_row();
}

CsvWriter &CsvWriter::cell(double v) {
    return cell(gwf::format_double(v));
}

CsvWriter &CsvWriter::cell(long long v) {
    return cell(std::to_string(v));
}

CsvWriter &CsvWriter::cell(const std::string &v) {
    if (!first_) {
        out_ += ',';
    }
    out_ += v;
    first_ = false;
    return *this;
}

void CsvWriter::end_row() {
    out_ += '\n';
    first_ = true;
}

}  // namespace gwfield_cli
