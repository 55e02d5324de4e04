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

// Impulsive pointer measurement: a quantum system with a nondegenerate
// observable coupled to a classical apparatus coordinate y.
//
// Units: hbar = 1 inside this module. Positions are in cm, tau in s, and the
// coupling g in cm per (eigenvalue unit * s), so the pointer moves by g p tau.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gwfield/statequant.hpp"

namespace gwf {

/// Pairwise apparatus-packet overlaps above this value mark outcomes as unresolved.
inline constexpr double kResolvedOverlap = 1e-6;

class MeasurementSetup {
   public:
    /// Validates: distinct eigenvalues, sum |c_p|^2 = 1 within 1e-10, width > 0, tau > 0.
    static MeasurementSetup create(std::vector<double> eigenvalues,
                                   std::vector<std::complex<double>> amplitudes, double y0,
                                   double width, double coupling, double tau);

    const std::vector<double> &eigenvalues() const {
        return p_;
    }
    const std::vector<std::complex<double>> &amplitudes() const {
        return c_;
    }
    double y0() const {
        return y0_;
    }
    /// Standard deviation of the apparatus density |psi^A|^2.
    double width() const {
        return w_;
    }
    double coupling() const {
        return g_;
    }
    double tau() const {
        return tau_;
    }
    std::size_t outcomes() const {
        return p_.size();
    }

   private:
    MeasurementSetup() = default;
    std::vector<double> p_;
    std::vector<std::complex<double>> c_;
    double y0_ = 0.0;
    double w_ = 1.0;
    double g_ = 0.0;
    double tau_ = 1.0;
};

/// Real Gaussian apparatus packet centred at `center` with density standard deviation `width`.
double apparatus_packet(double y, double center, double width);

/// <psi^A(y - a)|psi^A(y - b)> by quadrature on the product packet.
double packet_overlap(double a, double b, double width);

struct MeasurementRecord {
    std::vector<double> eigenvalues;
    std::vector<std::complex<double>> amplitudes;
    std::vector<double> pointer_positions;  ///< y0 + g p tau
    std::vector<double> weights;            ///< |c_p|^2
    Eigen::MatrixXd overlap_matrix;
    bool resolved = true;  ///< every off-diagonal overlap <= kResolvedOverlap
    /// sum_p |c_p|^2 |p><p| (x) |y_p><y_p| on the n*n joint label basis,
    /// index p * n + q for system label p and pointer label q.
    DensityMatrix post_state;
};

MeasurementRecord run_measurement(const MeasurementSetup &setup);

/// Traces the joint state over a second factor of dimension `dim_b`.
DensityMatrix partial_trace_second(const DensityMatrix &joint, Eigen::Index dim_b);

/// System state after tracing out the pointer labels.
DensityMatrix partial_trace_system(const MeasurementRecord &record);

/// Reduced system state of the coherent product state sum_p c_p |p>|psi^A(y - y_p)>
/// with the actual packet overlaps: rho_pq = c_p conj(c_q) <y_q|y_p>.
DensityMatrix coherent_reduced_state(const MeasurementRecord &record);

struct FrequencyTable {
    std::vector<std::uint64_t> counts;
    std::vector<double> frequencies;
    double max_deviation = 0.0;  ///< max_p |frequency_p - weight_p|
    std::uint64_t n_trials = 0;
    std::uint64_t seed = 0;
};

/// Draws outcomes with the Born weights from a mt19937_64 stream seeded with `seed`.
/// Each draw consumes one 64-bit word mapped to a 53-bit uniform in [0, 1).
FrequencyTable sample_outcomes(const MeasurementRecord &record, std::uint64_t n_trials,
                               std::uint64_t seed);

}  // namespace gwf
