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

#include "gwfield/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gwfield/constants.hpp"
#include "gwfield/error.hpp"
#include "gwfield/kernels.hpp"

namespace gwf {

Grid::Grid(std::vector<std::size_t> n_points, std::vector<double> lengths_cm) {
    if (n_points.empty() || n_points.size() > kMaxDim) {
        fail_argument("grid dimension must be 1, 2 or 3");
    }
    if (n_points.size() != lengths_cm.size()) {
        fail_argument("grid needs one length per axis");
    }
    dim_ = static_cast<int>(n_points.size());
    for (int a = 0; a < dim_; ++a) {
        if (n_points[a] < 8 || n_points[a] % 2 != 0) {
            fail_argument("grid axes need an even point count >= 8",
                          "axis " + std::to_string(a) + " has " + std::to_string(n_points[a]));
        }
        if (!(lengths_cm[a] > 0.0) || !std::isfinite(lengths_cm[a])) {
            fail_argument("grid lengths must be positive and finite");
        }
        n_[a] = n_points[a];
        length_[a] = lengths_cm[a];
    }
}

double Grid::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim_; ++a) {
        v *= spacing(a);
    }
    return v;
}

double Grid::volume() const {
    double v = 1.0;
    for (int a = 0; a < dim_; ++a) {
        v *= length_[a];
    }
    return v;
}

double Grid::centered_coordinate(int axis, std::size_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(n_[axis]);
    auto j = static_cast<std::ptrdiff_t>(i);
    if (j >= n / 2) {
        j -= n;
    }
    return static_cast<double>(j) * spacing(axis);
}

double Grid::wavenumber(int axis, std::size_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(n_[axis]);
    auto j = static_cast<std::ptrdiff_t>(i);
    if (j >= n / 2) {
        j -= n;
    }
    return 2.0 * std::numbers::pi * static_cast<double>(j) / length_[axis];
}

std::array<std::size_t, kMaxDim> Grid::unravel(std::size_t flat) const {
    std::array<std::size_t, kMaxDim> idx{};
    idx[2] = flat % n_[2];
    flat /= n_[2];
    idx[1] = flat % n_[1];
    idx[0] = flat / n_[1];
    return idx;
}

std::size_t Grid::stride(int axis) const {
    std::size_t s = 1;
    for (int a = kMaxDim - 1; a > axis; --a) {
        s *= n_[a];
    }
    return s;
}

std::vector<double> Grid::k_squared() const {
    std::vector<double> out(size());
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        const auto idx = unravel(flat);
        double k2 = 0.0;
        for (int a = 0; a < dim_; ++a) {
            const double k = wavenumber(a, idx[a]);
            k2 += k * k;
        }
        out[flat] = k2;
    }
    return out;
}

bool Grid::operator==(const Grid &other) const {
    return dim_ == other.dim_ && n_ == other.n_ && length_ == other.length_;
}

ComplexField::ComplexField(Grid grid, std::vector<cplx> values, bool normalized)
    : grid_(std::move(grid)), values_(std::move(values)), normalized_(normalized) {
    if (values_.size() != grid_.size()) {
        fail_argument("field size does not match grid",
                      std::to_string(values_.size()) + " values for " +
                          std::to_string(grid_.size()) + " points");
    }
    for (const cplx &v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            fail_argument("field values must be finite");
        }
    }
    if (normalized_ && std::abs(norm_squared() - 1.0) > kNormalizationTolerance) {
        fail_argument("field flagged normalized but its norm is not 1");
    }
}

ComplexField ComplexField::sample(const Grid &grid,
                                  const std::function<cplx(std::span<const double>)> &f) {
    std::vector<cplx> values(grid.size());
    std::array<double, kMaxDim> x{};
    for (std::size_t flat = 0; flat < values.size(); ++flat) {
        const auto idx = grid.unravel(flat);
        for (int a = 0; a < grid.dim(); ++a) {
            x[a] = grid.coordinate(a, idx[a]);
        }
        values[flat] = f(std::span<const double>(x.data(), grid.dim()));
    }
    return ComplexField(grid, std::move(values));
}

double ComplexField::norm_squared() const {
    return kernels::norm_sq_sum(values_) * grid_.cell_volume();
}

std::vector<double> ComplexField::density() const {
    std::vector<double> out(values_.size());
    kernels::abs_sq(values_, out);
    return out;
}

ComplexField ComplexField::scaled(cplx factor) const {
    std::vector<cplx> v(values_);
    for (cplx &z : v) {
        z *= factor;
    }
    return ComplexField(grid_, std::move(v));
}

double PlaneWaveSpec::k_norm() const {
    double k2 = 0.0;
    for (double k : k_vec_) {
        k2 += k * k;
    }
    return std::sqrt(k2);
}

PlaneWaveSpec PlaneWaveSpec::create(cplx amplitude, std::vector<double> k_vec, double omega,
                                    double mu) {
    if (k_vec.empty() || k_vec.size() > kMaxDim) {
        fail_argument("plane wave needs 1 to 3 wavevector components");
    }
    if (mu < 0.0 || !std::isfinite(mu) || !std::isfinite(omega)) {
        fail_argument("plane wave needs finite omega and mu >= 0");
    }
    double lhs = mu * mu;
    for (double k : k_vec) {
        lhs += k * k;
    }
    const double c = cgs().c;
    const double rhs = (omega / c) * (omega / c);
    const double scale = std::max(lhs, rhs);
    if (std::abs(lhs - rhs) > 1e-12 * scale) {
        fail_argument("plane wave is off shell: |k|^2 + mu^2 != omega^2/c^2",
                      "lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs));
    }
    return PlaneWaveSpec(amplitude, std::move(k_vec), omega, mu);
}

PlaneWaveSpec PlaneWaveSpec::on_shell(cplx amplitude, std::vector<double> k_vec, double mu) {
    double k2 = mu * mu;
    for (double k : k_vec) {
        k2 += k * k;
    }
    return create(amplitude, std::move(k_vec), cgs().c * std::sqrt(k2), mu);
}

ComplexField make_plane_wave(const PlaneWaveSpec &spec, const Grid &grid, double t) {
    if (static_cast<int>(spec.k_vec().size()) != grid.dim()) {
        fail_argument("plane wave dimension does not match grid");
    }
    for (int a = 0; a < grid.dim(); ++a) {
        const double cycles = spec.k_vec()[a] * grid.length(a) / (2.0 * std::numbers::pi);
        if (std::abs(cycles - std::round(cycles)) > 1e-9 * std::max(1.0, std::abs(cycles))) {
            fail_argument("wavevector is not commensurate with the periodic box",
                          "axis " + std::to_string(a) + ": k L / 2pi = " +
                              std::to_string(cycles));
        }
    }
    // Use the exact integer mode number so the phase is periodic to roundoff.
    std::vector<double> k_exact(grid.dim());
    for (int a = 0; a < grid.dim(); ++a) {
        const double cycles =
            std::round(spec.k_vec()[a] * grid.length(a) / (2.0 * std::numbers::pi));
        k_exact[a] = cycles;
    }
    const double wt = spec.omega() * t;
    const cplx amp = spec.amplitude();
    return ComplexField::sample(grid, [&](std::span<const double> x) {
        double turns = 0.0;  // k.x / 2pi, accumulated as a fraction of a cycle
        for (int a = 0; a < grid.dim(); ++a) {
            turns += k_exact[a] * x[a] / grid.length(a);
        }
        turns -= std::floor(turns);
        return amp * std::polar(1.0, 2.0 * std::numbers::pi * turns - wt);
    });
}

ComplexField normalize(const ComplexField &psi) {
    const double n2 = psi.norm_squared();
    if (!(n2 > 0.0)) {
        fail_argument("cannot normalize null state");
    }
    std::vector<cplx> v(psi.values().begin(), psi.values().end());
    kernels::scale(v, 1.0 / std::sqrt(n2));
    return ComplexField(psi.grid(), std::move(v), true);
}

cplx inner_product(const ComplexField &a, const ComplexField &b) {
    if (a.grid() != b.grid()) {
        fail_argument("inner product of fields on different grids");
    }
    return kernels::dot_conj(a.values(), b.values()) * a.grid().cell_volume();
}

}  // namespace gwf
