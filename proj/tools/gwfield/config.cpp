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


#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gwfield/error.hpp"

namespace gwfield_cli {

namespace {

std::string flag_name(const std::string &key) {
    std::string out = "--" + key;
    std::replace(out.begin(), out.end(), '_', '-');
    return out;
}

double parse_number(const std::string &text, const std::string &key) {
    double v = 0.0;
    const char *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
        gwf::fail_argument("key '" + key + "' expects a finite number, got '" + text + "'", key);
    }
    return v;
}

json parse_flag(const KeySpec &spec, const std::string &text) {
    switch (spec.type) {
        case KeyType::Number:
            return parse_number(text, spec.name);
        case KeyType::Integer: {
            long long v = 0;
            const char *end = text.data() + text.size();
            const auto res = std::from_chars(text.data(), end, v);
            if (res.ec != std::errc() || res.ptr != end) {
                gwf::fail_argument("key '" + spec.name + "' expects an integer, got '" + text + "'",
                                   spec.name);
            }
            return v;
        }
        case KeyType::Bool:
            if (text == "true" || text == "1") {
                return true;
            }
            if (text == "false" || text == "0") {
                return false;
            }
            gwf::fail_argument("key '" + spec.name + "' expects true or false", spec.name);
        case KeyType::NumberList: {
            json out = json::array();
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                out.push_back(parse_number(item, spec.name));
            }
            return out;
        }
        case KeyType::String:
        case KeyType::Json:
            return text;
    }
    return text;
}

void check_type(const KeySpec &spec, const json &v) {
    bool ok = false;
    switch (spec.type) {
        case KeyType::Number:
            ok = v.is_number() && std::isfinite(v.get<double>());
            break;
        case KeyType::Integer:
            ok = v.is_number_integer();
            break;
        case KeyType::String:
            ok = v.is_string();
            break;
        case KeyType::Bool:
            ok = v.is_boolean();
            break;
        case KeyType::NumberList:
            ok = v.is_array() && std::all_of(v.begin(), v.end(), [](const json &e) {
                     return e.is_number() && std::isfinite(e.get<double>());
                 });
            break;
        case KeyType::Json:
            ok = true;
            break;
    }
    if (!ok) {
        static const char *names[] = {"number", "integer", "string", "boolean", "list of numbers", "value"};
        gwf::fail_argument("key '" + spec.name + "' must be a " + names[static_cast<int>(spec.type)],
                           spec.name);
    }
}

}  // namespace

ConfigBuilder::ConfigBuilder(CLI::App *sub, std::vector<KeySpec> keys) {
    spec_option_ = sub->add_option("--spec", spec_path_, "JSON file with parameters");
    keys_.reserve(keys.size());
    for (auto &k : keys) {
        keys_.push_back(Bound{std::move(k), nullptr, {}});
    }
    for (auto &b : keys_) {
        if (b.spec.type == KeyType::Json) {
            continue;
        }
        std::string names = flag_name(b.spec.name);
        for (const auto &a : b.spec.aliases) {
            names += "," + a;
        }
        std::string help = b.spec.help;
        if (!b.spec.fallback.is_null()) {
            help += " (default " + b.spec.fallback.dump() + ")";
        }
        b.option = sub->add_option(names, b.raw, help);
    }
}

json ConfigBuilder::resolve() const {
    json cfg = json::object();
    for (const auto &b : keys_) {
        if (!b.spec.fallback.is_null()) {
            cfg[b.spec.name] = b.spec.fallback;
        }
    }
    if (spec_option_->count() > 0) {
        const json file = load_json_file(spec_path_);
        if (!file.is_object()) {
            gwf::fail_argument("spec file must hold a JSON object", spec_path_);
        }
        for (const auto &[key, value] : file.items()) {
            const auto it = std::find_if(keys_.begin(), keys_.end(),
                                         [&](const Bound &b) { return b.spec.name == key; });
            if (it == keys_.end()) {
                gwf::fail_argument("unknown key '" + key + "'", key);
            }
            check_type(it->spec, value);
            cfg[key] = value;
        }
    }
    for (const auto &b : keys_) {
        if (b.option != nullptr && b.option->count() > 0) {
            cfg[b.spec.name] = parse_flag(b.spec, b.raw);
        }
    }
    for (const auto &b : keys_) {
        if (b.spec.required && !cfg.contains(b.spec.name)) {
            gwf::fail_argument("missing required key '" + b.spec.name + "'", b.spec.name);
        }
    }
    return cfg;
}

void check_keys(const json &obj, std::initializer_list<const char *> allowed, const std::string &where) {
    if (!obj.is_object()) {
        gwf::fail_argument("'" + where + "' must be a JSON object", where);
    }
    for (const auto &[key, value] : obj.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char *a) { return key == a; });
        if (!known) {
            gwf::fail_argument("unknown key '" + where + "." + key + "'", where + "." + key);
        }
    }
}

const json &require(const json &obj, const char *key, const std::string &where) {
    if (!obj.contains(key)) {
        const std::string full = where.empty() ? std::string(key) : where + "." + key;
        gwf::fail_argument("missing required key '" + full + "'", full);
    }
    return obj.at(key);
}

double number(const json &v, const std::string &key) {
    if (!v.is_number() || !std::isfinite(v.get<double>())) {
        gwf::fail_argument("key '" + key + "' must be a finite number", key);
    }
    return v.get<double>();
}

std::vector<double> numbers(const json &v, const std::string &key) {
    if (v.is_number()) {
        return {number(v, key)};
    }
    if (!v.is_array()) {
        gwf::fail_argument("key '" + key + "' must be a list of numbers", key);
    }
    std::vector<double> out;
    for (const auto &e : v) {
        out.push_back(number(e, key));
    }
    return out;
}

std::complex<double> complex_value(const json &v, const std::string &key) {
    if (v.is_number()) {
        return {number(v, key), 0.0};
    }
    if (v.is_array() && v.size() == 2) {
        return {number(v[0], key), number(v[1], key)};
    }
    gwf::fail_argument("key '" + key + "' must be a number or a [re, im] pair", key);
}

std::vector<std::complex<double>> complex_list(const json &v, const std::string &key) {
    if (!v.is_array()) {
        gwf::fail_argument("key '" + key + "' must be a list", key);
    }
    std::vector<std::complex<double>> out;
    for (const auto &e : v) {
        out.push_back(complex_value(e, key));
    }
    return out;
}

gwf::CMatrix complex_matrix(const json &v, const std::string &key) {
    if (!v.is_array() || v.empty() || !v[0].is_array()) {
        gwf::fail_argument("key '" + key + "' must be a list of rows", key);
    }
    const auto rows = static_cast<Eigen::Index>(v.size());
    const auto cols = static_cast<Eigen::Index>(v[0].size());
    gwf::CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto row = complex_list(v[i], key);
        if (static_cast<Eigen::Index>(row.size()) != cols) {
            gwf::fail_argument("key '" + key + "' has rows of unequal length", key);
        }
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = row[j];
        }
    }
    return m;
}

json complex_to_json(std::complex<double> z) {
    return json::array({z.real(), z.imag()});
}

json matrix_to_json(const gwf::CMatrix &m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        gwf::fail_io("cannot open JSON file", path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        gwf::fail_argument(std::string("malformed JSON: ") + e.what(), path);
    }
}

}  // namespace gwfield_cli
