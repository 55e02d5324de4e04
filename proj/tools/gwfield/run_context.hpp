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


#pragma once

// Output directory, file registry and run manifest for one CLI invocation.

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "gwfield/field.hpp"
#include "json.hpp"

namespace gwfield_cli {

class RunContext {
   public:
    /// With an explicit `out` that already exists the run fails (Io) rather than
    /// overwrite. Otherwise the directory is <root>/<subcommand>-<8 hex of the
    /// config hash>, root being $GWFIELD_OUTPUT_DIR or ./gwfield-out, with a
    /// numeric suffix appended while that name is taken.
    RunContext(std::string subcommand, nlohmann::json config, const std::string &out);

    const std::filesystem::path &dir() const {
        return dir_;
    }
    const nlohmann::json &config() const {
        return config_;
    }

    void write_text(const std::string &name, const std::string &body);
    void write_json(const std::string &name, const nlohmann::json &body);
    /// CSV dump plus JSON sidecar.
    void write_field(const std::string &name, const gwf::ComplexField &psi,
                     const nlohmann::json &extra = nlohmann::json::object());

    /// Writes manifest.json; returns its path.
    std::filesystem::path finish();

   private:
    void add(const std::filesystem::path &p);

    std::string subcommand_;
    nlohmann::json config_;
    std::filesystem::path dir_;
    std::vector<std::filesystem::path> files_;
    std::chrono::steady_clock::time_point start_;
};

/// Joins cells with ',' and rows with '\n'.
class CsvWriter {
   public:
    explicit CsvWriter(std::vector<std::string> header);
    CsvWriter &cell(double v);
    CsvWriter &cell(long long v);
    CsvWriter &cell(const std::string &v);
    void end_row();
    std::string str() const {
        return out_;
    }

   private:
    std::string out_;
    bool first_ = true;
};

}  // namespace gwfield_cli
