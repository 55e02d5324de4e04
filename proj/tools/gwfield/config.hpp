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

// Subcommand parameter schemas: every key can come from a JSON spec file
// (`--spec`) or from a unit-suffixed flag; flags win over the file, and the
// file wins over defaults.

#include <complex>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gwfield/statequant.hpp"
#include "json.hpp"

namespace gwfield_cli {

using nlohmann::json;

enum class KeyType { Number, Integer, String, Bool, NumberList, Json };

struct KeySpec {
    std::string name;  ///< JSON key; the flag is "--" + name with '_' -> '-'
    KeyType type = KeyType::Number;
    json fallback;     ///< default; null with `required` unset means "may be absent"
    bool required = false;
    std::string help;
    std::vector<std::string> aliases;  ///< extra flag spellings, e.g. "--T"
};

class ConfigBuilder {
   public:
    ConfigBuilder(CLI::App *sub, std::vector<KeySpec> keys);

    /// Defaults, then the `--spec` JSON file, then flags. Unknown keys, wrong types and
    /// missing required keys raise InvalidArgument naming the key.
    json resolve() const;

   private:
    struct Bound {
        KeySpec spec;
        CLI::Option *option = nullptr;
        std::string raw;
    };
    std::vector<Bound> keys_;
    std::string spec_path_;
    CLI::Option *spec_option_ = nullptr;
};

/// Rejects keys of `obj` outside `allowed`; `where` prefixes the key in messages.
void check_keys(const json &obj, std::initializer_list<const char *> allowed, const std::string &where);

const json &require(const json &obj, const char *key, const std::string &where);
double number(const json &v, const std::string &key);
std::vector<double> numbers(const json &v, const std::string &key);

/// A real number or a [re, im] pair.
std::complex<double> complex_value(const json &v, const std::string &key);
std::vector<std::complex<double>> complex_list(const json &v, const std::string &key);
gwf::CMatrix complex_matrix(const json &v, const std::string &key);

json complex_to_json(std::complex<double> z);
json matrix_to_json(const gwf::CMatrix &m);

json load_json_file(const std::string &path);

}  // namespace gwfield_cli
