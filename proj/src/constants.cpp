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

#include "gwfield/constants.hpp"

#include <cmath>
#include <sstream>

#include "gwfield/textio.hpp"

namespace gwf {
namespace {

CgsConstants make_table() {
    CgsConstants k{};
    k.hbar = 1.054571817e-27;
    k.c = 2.99792458e10;
    k.k_B = 1.380649e-16;
    k.mu_B = 9.2740100783e-21;
    k.e_charge = 4.803204712570263e-10;
    k.m_e = 9.1093837015e-28;
    k.alpha = 7.2973525693e-3;
    k.G_newton = 6.67430e-8;
    k.l_P = std::sqrt(k.hbar * k.G_newton / (k.c * k.c * k.c));
    k.omega_P = std::sqrt(k.c * k.c * k.c * k.c * k.c / (k.hbar * k.G_newton));
    return k;
}

}  // namespace

const CgsConstants &cgs() {
    static const CgsConstants table = make_table();
    return table;
}

std::string constants_canonical_text() {
    const CgsConstants &k = cgs();
    std::ostringstream out;
    out << "hbar=" << format_double(k.hbar) << '\n'
        << "c=" << format_double(k.c) << '\n'
        << "k_B=" << format_double(k.k_B) << '\n'
        << "mu_B=" << format_double(k.mu_B) << '\n'
        << "e_charge=" << format_double(k.e_charge) << '\n'
        << "m_e=" << format_double(k.m_e) << '\n'
        << "alpha=" << format_double(k.alpha) << '\n'
        << "G_newton=" << format_double(k.G_newton) << '\n'
        << "l_P=" << format_double(k.l_P) << '\n'
        << "omega_P=" << format_double(k.omega_P) << '\n';
    return out.str();
}

std::string constants_checksum() {
    return sha256_hex(constants_canonical_text());
}

}  // namespace gwf
