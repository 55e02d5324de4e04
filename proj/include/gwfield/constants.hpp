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

#include <numbers>
#include <string>

namespace gwf {

/// Physical constants in CGS-Gaussian units (CODATA 2018).
///
/// Every module reads constants from this table; tests compare against the
/// table rather than against literals.
struct CgsConstants {
    double hbar;       ///< erg s
    double c;          ///< cm / s
    double k_B;        ///< erg / K
    double mu_B;       ///< erg / G
    double e_charge;   ///< esu
    double m_e;        ///< g
    double alpha;      ///< dimensionless
    double G_newton;   ///< cm^3 / (g s^2)
    double l_P;        ///< cm
    double omega_P;    ///< rad / s, 1 / t_P

    double h() const {
        return 2.0 * std::numbers::pi * hbar;
    }
    /// Coupling constant of the complex scalar Lagrangian, hbar * c * l_P.
    double xi() const {
        return hbar * c * l_P;
    }
};

/// The pinned table.
const CgsConstants &cgs();

/// Hex SHA-256 of the canonical serialization of `cgs()`; recorded in run manifests.
std::string constants_checksum();

/// Canonical text form used for the checksum (one `name=value` per line).
std::string constants_canonical_text();

}  // namespace gwf
