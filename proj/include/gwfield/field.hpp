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

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gwf {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 3;

/// Uniform periodic grid with 1 to 3 axes. Axis 0 is the slowest-varying
/// index in flat storage (row-major), matching FFTW's layout.
class Grid {
   public:
    /// Throws InvalidArgument unless every axis has an even point count >= 8
    /// and a positive finite length.
    Grid(std::vector<std::size_t> n_points, std::vector<double> lengths_cm);

    /// Convenience for the common 1D case.
    static Grid line(std::size_t n_points, double length_cm) {
        return Grid({n_points}, {length_cm});
    }

    int dim() const {
        return dim_;
    }
    std::size_t n(int axis) const {
        return n_[axis];
    }
    double length(int axis) const {
        return length_[axis];
    }
    double spacing(int axis) const {
        return length_[axis] / static_cast<double>(n_[axis]);
    }
    std::size_t size() const {
        return n_[0] * n_[1] * n_[2];
    }
    double cell_volume() const;
    double volume() const;
    bool periodic() const {
        return true;
    }

    /// Position of grid index `i` along `axis`, origin at 0: i * dx.
    double coordinate(int axis, std::size_t i) const {
        return static_cast<double>(i) * spacing(axis);
    }
    /// Sawtooth coordinate in [-L/2, L/2): the position operator on the torus.
    double centered_coordinate(int axis, std::size_t i) const;

    /// Angular wavenumber of FFT bin `i` along `axis` (FFT ordering).
    double wavenumber(int axis, std::size_t i) const;
    /// True when `i` is the Nyquist bin of `axis`.
    bool is_nyquist(int axis, std::size_t i) const {
        return i == n_[axis] / 2;
    }

    std::array<std::size_t, kMaxDim> unravel(std::size_t flat) const;
    std::size_t ravel(const std::array<std::size_t, kMaxDim> &idx) const {
        return (idx[0] * n_[1] + idx[1]) * n_[2] + idx[2];
    }
    /// Stride of `axis` in flat storage.
    std::size_t stride(int axis) const;

    /// |k|^2 for every flat index, FFT ordering.
    std::vector<double> k_squared() const;

    bool operator==(const Grid &other) const;
    bool operator!=(const Grid &other) const {
        return !(*this == other);
    }

   private:
    int dim_;
    std::array<std::size_t, kMaxDim> n_{1, 1, 1};
    std::array<double, kMaxDim> length_{1.0, 1.0, 1.0};
};

/// Real scalar field on a grid (densities, phases, potentials).
struct RealField {
    Grid grid;
    std::vector<double> values;
};

/// Complex amplitude sampled on a periodic grid.
///
/// Immutable after construction. Values are always finite; when the
/// `normalized` flag is set the construction also verifies sum |psi|^2 dV = 1
/// to 1e-10.
class ComplexField {
   public:
    ComplexField(Grid grid, std::vector<cplx> values, bool normalized = false);

    /// Samples `f` at every grid point. `f` receives the (origin-at-0)
    /// coordinates of the point, one entry per axis.
    static ComplexField sample(const Grid &grid,
                               const std::function<cplx(std::span<const double>)> &f);

    const Grid &grid() const {
        return grid_;
    }
    std::span<const cplx> values() const {
        return values_;
    }
    const cplx &operator[](std::size_t i) const {
        return values_[i];
    }
    std::size_t size() const {
        return values_.size();
    }
    bool normalized() const {
        return normalized_;
    }

    /// sum |psi|^2 dV
    double norm_squared() const;
    /// |psi|^2 per point.
    std::vector<double> density() const;

    /// Copy with every value multiplied by `factor`; the normalized flag is dropped.
    ComplexField scaled(cplx factor) const;

   private:
    Grid grid_;
    std::vector<cplx> values_;
    bool normalized_;
};

inline constexpr double kNormalizationTolerance = 1e-10;

/// Plane-wave parameters, always on shell: |k|^2 + mu^2 = omega^2 / c^2 to
/// 1e-12 relative. Instances can only be obtained through the factories.
class PlaneWaveSpec {
   public:
    /// Rejects (k, omega, mu) triples that violate the dispersion relation.
    static PlaneWaveSpec create(cplx amplitude, std::vector<double> k_vec, double omega,
                                double mu = 0.0);
    /// Derives omega = c sqrt(|k|^2 + mu^2).
    static PlaneWaveSpec on_shell(cplx amplitude, std::vector<double> k_vec, double mu = 0.0);

    cplx amplitude() const {
        return amplitude_;
    }
    const std::vector<double> &k_vec() const {
        return k_vec_;
    }
    double omega() const {
        return omega_;
    }
    double mu() const {
        return mu_;
    }
    double k_norm() const;

   private:
    PlaneWaveSpec(cplx amplitude, std::vector<double> k_vec, double omega, double mu)
        : amplitude_(amplitude), k_vec_(std::move(k_vec)), omega_(omega), mu_(mu) {
    }
    cplx amplitude_;
    std::vector<double> k_vec_;
    double omega_;
    double mu_;
};

/// A exp(i(k.x - omega t)) on the grid. Every k component must be an integer
/// multiple of 2 pi / L along its axis.
ComplexField make_plane_wave(const PlaneWaveSpec &spec, const Grid &grid, double t);

/// Rescales to unit norm over the periodic box. Throws on the null field.
ComplexField normalize(const ComplexField &psi);

/// <a|b> = sum conj(a) b dV. Grids must match.
cplx inner_product(const ComplexField &a, const ComplexField &b);

}  // namespace gwf
