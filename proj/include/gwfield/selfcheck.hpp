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

// Acceptance criteria as runnable checks, shared by the acceptance test
// binary and `gwfield check`.

#include <string>
#include <vector>

namespace gwf::selfcheck {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  ///< measured values against their pinned tolerances
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

/// Number of criteria, numbered 1..count().
int count();

/// Runs one criterion. Exceptions become failed results; exceeding the
/// runtime budget fails the criterion as well.
CriterionResult run(int id);

std::vector<CriterionResult> run_all();

/// "PASS [n] name (1.23 s / 5 s): detail"
std::string format_line(const CriterionResult &r);

}  // namespace gwf::selfcheck
