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

// FFT-backed spectral calculus on periodic grids (FFTW3 underneath).

#include <span>
#include <vector>

#include "gwfield/field.hpp"

namespace gwf::spectral {

/// Unnormalized forward DFT, X_k = sum_x f_x exp(-i k.x).
std::vector<cplx> forward(const Grid &grid, std::span<const cplx> values);
/// Inverse DFT including the 1/N factor.
std::vector<cplx> inverse(const Grid &grid, std::span<const cplx> coeffs);

/// Orthonormal Fourier coefficients c_k = <e_k|psi> with e_k = exp(ik.x)/sqrt(V),
/// so that sum |c_k|^2 = sum |psi|^2 dV.
std::vector<cplx> coefficients(const ComplexField &psi);

/// Partial derivative along `axis`. The Nyquist bin's derivative is zeroed.
std::vector<cplx> derivative(const Grid &grid, std::span<const cplx> values, int axis);
/// Second derivative along `axis` (Nyquist bin kept, -k^2 is unambiguous).
std::vector<cplx> second_derivative(const Grid &grid, std::span<const cplx> values, int axis);
/// Laplacian.
std::vector<cplx> laplacian(const Grid &grid, std::span<const cplx> values);

/// Real-valued wrappers; the result is the real part of the complex route.
std::vector<double> derivative(const Grid &grid, std::span<const double> values, int axis);
std::vector<double> laplacian(const Grid &grid, std::span<const double> values);

/// Laplacian with FFT roundoff removed: coefficients below `drop_below` times
/// the peak coefficient magnitude are zeroed before differentiating.
std::vector<cplx> laplacian_denoised(const Grid &grid, std::span<const cplx> values,
                                     double drop_below = 1e-13);

/// In-place 1D DFT of any length >= 1 (unnormalized in both directions).
void dft_1d(std::span<cplx> data, bool inverse);

/// Multiplies every Fourier mode by `multiplier[k]` (FFT ordering, flat index).
std::vector<cplx> apply_multiplier(const Grid &grid, std::span<const cplx> values,
                                   std::span<const cplx> multiplier);

}  // namespace gwf::spectral
