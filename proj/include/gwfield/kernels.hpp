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

// Data-parallel inner loops over complex<double> arrays.
//
// Each kernel has a scalar reference implementation and, where the target
// supports it, an AVX2+FMA (x86-64) or NEON (aarch64) variant. The active
// table is chosen once at first use from CPU feature detection; setting
// GWFIELD_KERNELS=scalar|avx2|neon forces a particular table.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gwf::kernels {

using cplx = std::complex<double>;

struct KernelTable {
    const char *name;
    /// sum |x_i|^2
    double (*norm_sq_sum)(const cplx *x, std::size_t n);
    /// sum conj(a_i) b_i
    cplx (*dot_conj)(const cplx *a, const cplx *b, std::size_t n);
    /// x_i *= m_i
    void (*multiply)(cplx *x, const cplx *m, std::size_t n);
    /// out_i = |x_i|^2
    void (*abs_sq)(const cplx *x, double *out, std::size_t n);
    /// x_i *= s
    void (*scale)(cplx *x, double s, std::size_t n);
    /// Per-mode harmonic rotation with real coefficients:
    ///   u' = a u + b v,  v' = -c u + a v
    void (*rotate_pair)(cplx *u, cplx *v, const double *a, const double *b, const double *c,
                        std::size_t n);
};

const KernelTable &scalar_table();
/// nullptr when the variant was not compiled in or the CPU lacks the features.
const KernelTable *avx2_table();
const KernelTable *neon_table();

/// Every table usable on this machine, scalar first.
std::vector<const KernelTable *> available_tables();

/// The table selected for this process.
const KernelTable &active();

inline double norm_sq_sum(std::span<const cplx> x) {
    return active().norm_sq_sum(x.data(), x.size());
}
inline cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b) {
    return active().dot_conj(a.data(), b.data(), a.size());
}
inline void multiply(std::span<cplx> x, std::span<const cplx> m) {
    active().multiply(x.data(), m.data(), x.size());
}
inline void abs_sq(std::span<const cplx> x, std::span<double> out) {
    active().abs_sq(x.data(), out.data(), x.size());
}
inline void scale(std::span<cplx> x, double s) {
    active().scale(x.data(), s, x.size());
}
inline void rotate_pair(std::span<cplx> u, std::span<cplx> v, std::span<const double> a,
                        std::span<const double> b, std::span<const double> c) {
    active().rotate_pair(u.data(), v.data(), a.data(), b.data(), c.data(), u.size());
}

}  // namespace gwf::kernels
