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

#include "gwfield/textio.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gwfield/error.hpp"

namespace gwf {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        fail_numerical("SHA-256 digest failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[md[i] >> 4]);
        out.push_back(kHex[md[i] & 0xF]);
    }
    return out;
}

std::string sha256_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail_io("cannot open file for hashing", path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return sha256_hex(ss.str());
}

nlohmann::json grid_to_json(const Grid &grid) {
    nlohmann::json n = nlohmann::json::array();
    nlohmann::json len = nlohmann::json::array();
    nlohmann::json dx = nlohmann::json::array();
    for (int a = 0; a < grid.dim(); ++a) {
        n.push_back(grid.n(a));
        len.push_back(grid.length(a));
        dx.push_back(grid.spacing(a));
    }
    return {{"dim", grid.dim()},
            {"n_points", n},
            {"length_cm", len},
            {"spacing_cm", dx},
            {"periodic", true}};
}

Grid grid_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        fail_argument("grid must be a JSON object", "grid");
    }
    for (const auto &[key, _] : j.items()) {
        if (key != "n_points" && key != "length_cm" && key != "dim" && key != "spacing_cm" &&
            key != "periodic") {
            fail_argument("unknown key in grid", "grid." + key);
        }
    }
    if (!j.contains("n_points") || !j.contains("length_cm")) {
        fail_argument("grid needs n_points and length_cm", "grid");
    }
    std::vector<std::size_t> n;
    std::vector<double> len;
    try {
        n = j.at("n_points").get<std::vector<std::size_t>>();
        len = j.at("length_cm").get<std::vector<double>>();
    } catch (const nlohmann::json::exception &) {
        fail_argument("grid.n_points must be integers and grid.length_cm numbers", "grid");
    }
    Grid grid(n, len);
    if (j.contains("dim") && j.at("dim") != grid.dim()) {
        fail_argument("grid.dim disagrees with n_points", "grid.dim");
    }
    if (j.contains("periodic") && j.at("periodic") != true) {
        fail_argument("only periodic grids are supported", "grid.periodic");
    }
    return grid;
}

std::filesystem::path sidecar_path(const std::filesystem::path &csv_path) {
    auto p = csv_path;
    p.replace_extension(".json");
    return p;
}

void write_field(const ComplexField &psi, const std::filesystem::path &csv_path,
                 const nlohmann::json &extra) {
    const Grid &grid = psi.grid();
    std::ofstream csv(csv_path);
    if (!csv) {
        fail_io("cannot open field CSV for writing", csv_path.string());
    }
    for (int a = 0; a < grid.dim(); ++a) {
        csv << 'i' << a << ',';
    }
    csv << "re,im\n";
    for (std::size_t flat = 0; flat < psi.size(); ++flat) {
        const auto idx = grid.unravel(flat);
        for (int a = 0; a < grid.dim(); ++a) {
            csv << idx[a] << ',';
        }
        csv << format_double(psi[flat].real()) << ',' << format_double(psi[flat].imag()) << '\n';
    }
    if (!csv) {
        fail_io("failed writing field CSV", csv_path.string());
    }

    nlohmann::json side = {
        {"grid", grid_to_json(grid)},
        {"units",
         {{"coordinates", "cm"}, {"values", psi.normalized() ? "cm^-d/2" : "arbitrary"}}},
        {"normalized", psi.normalized()},
        {"csv", csv_path.filename().string()},
    };
    for (const auto &[key, value] : extra.items()) {
        side[key] = value;
    }
    std::ofstream js(sidecar_path(csv_path));
    if (!js) {
        fail_io("cannot open field sidecar for writing", sidecar_path(csv_path).string());
    }
    js << side.dump(2) << '\n';
}

namespace {

double parse_double(std::string_view s, const std::string &where) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        fail_io("malformed number in field CSV", where);
    }
    return v;
}

std::size_t parse_index(std::string_view s, const std::string &where) {
    std::size_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        fail_io("malformed index in field CSV", where);
    }
    return v;
}

}  // namespace

FieldDump read_field(const std::filesystem::path &csv_path) {
    std::ifstream js(sidecar_path(csv_path));
    if (!js) {
        fail_io("missing field sidecar", sidecar_path(csv_path).string());
    }
    nlohmann::json side;
    try {
        side = nlohmann::json::parse(js);
    } catch (const nlohmann::json::exception &e) {
        fail_io(std::string("malformed field sidecar: ") + e.what(),
                sidecar_path(csv_path).string());
    }
    if (!side.contains("grid")) {
        fail_io("field sidecar lacks grid", sidecar_path(csv_path).string());
    }
    const Grid grid = grid_from_json(side.at("grid"));
    const bool normalized = side.value("normalized", false);

    std::ifstream csv(csv_path);
    if (!csv) {
        fail_io("cannot open field CSV", csv_path.string());
    }
    std::string line;
    std::getline(csv, line);  // header
    std::vector<cplx> values(grid.size());
    std::vector<bool> seen(grid.size(), false);
    std::size_t row = 0;
    const int n_cols = grid.dim() + 2;
    while (std::getline(csv, line)) {
        if (line.empty()) {
            continue;
        }
        ++row;
        const std::string where = csv_path.string() + ":" + std::to_string(row + 1);
        std::vector<std::string_view> cols;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            cols.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (static_cast<int>(cols.size()) != n_cols) {
            fail_io("wrong column count in field CSV", where);
        }
        std::array<std::size_t, kMaxDim> idx{};
        for (int a = 0; a < grid.dim(); ++a) {
            idx[a] = parse_index(cols[a], where);
            if (idx[a] >= grid.n(a)) {
                fail_io("grid index out of range in field CSV", where);
            }
        }
        const std::size_t flat = grid.ravel(idx);
        values[flat] = {parse_double(cols[grid.dim()], where),
                        parse_double(cols[grid.dim() + 1], where)};
        seen[flat] = true;
    }
    for (bool s : seen) {
        if (!s) {
            fail_io("field CSV does not cover every grid point", csv_path.string());
        }
    }
    return FieldDump{ComplexField(grid, std::move(values), normalized), side};
}

}  // namespace gwf
