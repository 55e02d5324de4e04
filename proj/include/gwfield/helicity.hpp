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

// Signed-frequency (partial-wave) split of a sampled time series, the
// convection current, and its continuity check.
//
// Convention: psi_minus collects the e^{-i omega t} content with omega > 0
// (negative bins of a forward DFT) together with the zero-frequency bin;
// psi_plus collects omega < 0.

#include <cstddef>
#include <vector>

#include "gwfield/field.hpp"

namespace gwf {

class TimeSeriesField {
   public:
    /// At least 8 snapshots on one grid, uniform spacing dt > 0.
    TimeSeriesField(std::vector<ComplexField> snapshots, double dt);

    const Grid &grid() const {
        return snapshots_.front().grid();
    }
    std::size_t size() const {
        return snapshots_.size();
    }
    double dt() const {
        return dt_;
    }
    const ComplexField &operator[](std::size_t n) const {
        return snapshots_[n];
    }
    const std::vector<ComplexField> &snapshots() const {
        return snapshots_;
    }

   private:
    std::vector<ComplexField> snapshots_;
    double dt_;
};

struct PartialWaves {
    TimeSeriesField plus;
    TimeSeriesField minus;
    double power_plus = 0.0;   ///< snapshot mean of ||psi_plus||^2
    double power_minus = 0.0;  ///< snapshot mean of ||psi_minus||^2
    double reconstruction_error = 0.0;  ///< max |psi - psi_plus - psi_minus| / max |psi|
    /// Least common period of the occupied frequency bins, in snapshots.
    std::size_t common_period = 0;
};

/// Throws when the temporal Nyquist bin holds more than 1e-10 of the peak bin.
PartialWaves partial_wave_split(const TimeSeriesField &series);

struct CurrentField {
    Grid grid;
    std::vector<std::vector<double>> j;  ///< hbar Im(conj(psi) grad psi), one array per axis
    std::vector<double> rho_t;           ///< hbar k0 |psi|^2
};

CurrentField convection_current(const ComplexField &psi, double k0);

/// RMS over interior snapshots of d rho_t/dt + (hbar k0 / m*) div j, where
/// hbar k0 / m* = 2c for the effective mass m* = hbar k0 / 2c of the
/// Schrodinger-like evolution. Normalized by max |d rho_t/dt| plus a floor of
/// 1e-4 max(rho_t) c (<k^2> + k_1^2) / k0.
double current_continuity(const TimeSeriesField &series, double k0);

/// Maximum over the grid of the time-averaged cross current
/// hbar Im(conj(psi_+) grad psi_- + conj(psi_-) grad psi_+), averaged over one
/// common period, divided by the maximum |j|.
double cross_current_average(const PartialWaves &waves, const TimeSeriesField &series);

/// (hbar / c) Im(conj(psi_dot) psi): the charge density of the second-order
/// wave equation. Equals hbar k0 |psi|^2 for a pure e^{-i c k0 t} mode and can
/// be negative.
std::vector<double> wave_equation_charge(const ComplexField &psi, const ComplexField &psi_dot);

}  // namespace gwf
