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

#include <string>
#include <vector>

#include "config.hpp"
#include "run_context.hpp"

namespace gwfield_cli {

struct Command {
    std::string name;
    std::string description;
    std::vector<KeySpec> keys;
    /// Returns the process exit code on success paths.
    int (*run)(RunContext &ctx, const json &cfg);
};

std::vector<Command> wave_commands();
std::vector<Command> quantum_commands();
std::vector<Command> thermal_commands();

/// Coordinates of flat point `i` followed by `values`, as one CSV row.
void write_point(CsvWriter &csv, const gwf::Grid &grid, std::size_t i);
std::vector<std::string> coordinate_header(const gwf::Grid &grid);

}  // namespace gwfield_cli
