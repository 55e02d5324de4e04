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

// Number formatting, hashing and the field dump format (CSV + JSON sidecar).

#include <filesystem>
#include <string>
#include <string_view>

#include "gwfield/field.hpp"
#include "json.hpp"

namespace gwf {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

/// Lower-case hex SHA-256 digest.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path &path);

/// Grid metadata as stored in sidecars and specs.
nlohmann::json grid_to_json(const Grid &grid);
/// Accepts {"n_points": [...], "length_cm": [...]}; other keys present in a
/// sidecar ("dim", "spacing_cm", "periodic") are checked for consistency.
Grid grid_from_json(const nlohmann::json &j);

/// Writes `csv_path` with columns (i0[, i1[, i2]], re, im) and a sidecar at
/// `csv_path` with extension ".json" holding the grid, units, the normalized
/// flag and every key of `extra`.
void write_field(const ComplexField &psi, const std::filesystem::path &csv_path,
                 const nlohmann::json &extra = nlohmann::json::object());

struct FieldDump {
    ComplexField field;
    nlohmann::json sidecar;
};

/// Reads a dump written by `write_field`. Throws Io on missing files and
/// malformed rows.
FieldDump read_field(const std::filesystem::path &csv_path);

std::filesystem::path sidecar_path(const std::filesystem::path &csv_path);

}  // namespace gwf
