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


#include "gwfield/hybridmeas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "gwfield/error.hpp"

namespace gwf {

MeasurementSetup MeasurementSetup::create(std::vector<double> eigenvalues,
                                          std::vector<std::complex<double>> amplitudes,
                                          double y0, double width, double coupling,
                                          double tau) {
    if (eigenvalues.empty()) {
        fail_argument("measurement needs at least one eigenvalue");
    }
    if (eigenvalues.size() != amplitudes.size()) {
        fail_argument("eigenvalue and amplitude counts differ");
    }
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        if (!std::isfinite(eigenvalues[i])) {
            fail_argument("eigenvalues must be finite");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (eigenvalues[i] == eigenvalues[j]) {
                fail_argument("duplicate eigenvalues", "eigenvalue " + std::to_string(eigenvalues[i]));
            }
        }
    }
    double total = 0.0;
    for (const auto &c : amplitudes) {
        total += std::norm(c);
    }
    if (!(std::abs(total - 1.0) <= 1e-10)) {
        fail_argument("amplitudes are not normalized", "sum |c|^2 = " + std::to_string(total));
    }
    if (!(width > 0.0) || !std::isfinite(width)) {
        fail_argument("apparatus width must be positive");
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        fail_argument("interaction time must be positive");
    }
    if (!std::isfinite(y0) || !std::isfinite(coupling)) {
        fail_argument("pointer origin and coupling must be finite");
    }
    MeasurementSetup s;
    s.p_ = std::move(eigenvalues);
    s.c_ = std::move(amplitudes);
    s.y0_ = y0;
    s.w_ = width;
    s.g_ = coupling;
    s.tau_ = tau;
    return s;
}

double apparatus_packet(double y, double center, double width) {
    const double d = (y - center) / width;
    return std::pow(2.0 * std::numbers::pi * width * width, -0.25) * std::exp(-0.25 * d * d);
}

double packet_overlap(double a, double b, double width) {
    // The integrand is a Gaussian about the midpoint with standard deviation w / sqrt(2);
    // +-12 w covers it far beyond double precision, and w / 16 spacing makes the
    // trapezoid rule spectrally accurate.
    const double mid = 0.5 * (a + b);
    const double h = width / 16.0;
    const int half = 12 * 16;
    double sum = 0.0;
    for (int i = -half; i <= half; ++i) {
        const double y = mid + i * h;
        sum += apparatus_packet(y, a, width) * apparatus_packet(y, b, width);
    }
    return sum * h;
}

MeasurementRecord run_measurement(const MeasurementSetup &setup) {
    const std::size_t n = setup.outcomes();
    std::vector<double> y(n);
    std::vector<double> w(n);
    for (std::size_t p = 0; p < n; ++p) {
        y[p] = setup.y0() + setup.coupling() * setup.eigenvalues()[p] * setup.tau();
        w[p] = std::norm(setup.amplitudes()[p]);
    }
    Eigen::MatrixXd overlap(n, n);
    bool resolved = true;
    for (std::size_t p = 0; p < n; ++p) {
        overlap(p, p) = 1.0;
        for (std::size_t q = 0; q < p; ++q) {
            const double s = packet_overlap(y[p], y[q], setup.width());
            overlap(p, q) = s;
            overlap(q, p) = s;
            resolved = resolved && s <= kResolvedOverlap;
        }
    }
    const auto dim = static_cast<Eigen::Index>(n * n);
    CMatrix joint = CMatrix::Zero(dim, dim);
    for (std::size_t p = 0; p < n; ++p) {
        const auto idx = static_cast<Eigen::Index>(p * n + p);
        joint(idx, idx) = w[p];
    }
    return MeasurementRecord{setup.eigenvalues(), setup.amplitudes(),  std::move(y),
                             std::move(w),        std::move(overlap), resolved,
                             DensityMatrix::from_matrix(joint)};
}

DensityMatrix partial_trace_second(const DensityMatrix &joint, Eigen::Index dim_b) {
    if (dim_b <= 0 || joint.dim() % dim_b != 0) {
        fail_argument("traced factor dimension does not divide the joint dimension");
    }
    const Eigen::Index dim_a = joint.dim() / dim_b;
    const CMatrix &m = joint.matrix();
    CMatrix out = CMatrix::Zero(dim_a, dim_a);
    for (Eigen::Index i = 0; i < dim_a; ++i) {
        for (Eigen::Index j = 0; j < dim_a; ++j) {
            std::complex<double> acc{0.0, 0.0};
            for (Eigen::Index k = 0; k < dim_b; ++k) {
                acc += m(i * dim_b + k, j * dim_b + k);
            }
            out(i, j) = acc;
        }
    }
    return DensityMatrix::from_matrix(out);
}

DensityMatrix partial_trace_system(const MeasurementRecord &record) {
    return partial_trace_second(record.post_state,
                                static_cast<Eigen::Index>(record.pointer_positions.size()));
}

DensityMatrix coherent_reduced_state(const MeasurementRecord &record) {
    const auto n = static_cast<Eigen::Index>(record.amplitudes.size());
    CMatrix rho(n, n);
    for (Eigen::Index p = 0; p < n; ++p) {
        for (Eigen::Index q = 0; q < n; ++q) {
            rho(p, q) = record.amplitudes[p] * std::conj(record.amplitudes[q]) *
                        record.overlap_matrix(q, p);
        }
    }
    return DensityMatrix::from_matrix(rho);
}

FrequencyTable sample_outcomes(const MeasurementRecord &record, std::uint64_t n_trials,
                               std::uint64_t seed) {
    if (n_trials == 0) {
        fail_argument("n_trials must be at least 1");
    }
    const std::size_t n = record.weights.size();
    std::vector<double> cumulative(n);
    double acc = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        acc += record.weights[p];
        cumulative[p] = acc;
    }
    for (auto &c : cumulative) {
        c /= acc;
    }
    cumulative.back() = 1.0;

    FrequencyTable table;
    table.counts.assign(n, 0);
    table.n_trials = n_trials;
    table.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < n_trials; ++t) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        ++table.counts[static_cast<std::size_t>(it - cumulative.begin())];
    }
    table.frequencies.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
        table.frequencies[p] = static_cast<double>(table.counts[p]) / static_cast<double>(n_trials);
        table.max_deviation =
            std::max(table.max_deviation, std::abs(table.frequencies[p] - record.weights[p]));
    }
    return table;
}

}  // namespace gwf
