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

// NEON variants for aarch64 (float64x2_t holds one complex value).

#include "kernels_variants.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace gwf::kernels {
namespace {

double norm_sq_sum_neon(const cplx *x, std::size_t n) {
    const double *p = reinterpret_cast<const double *>(x);
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t a = vld1q_f64(p + 2 * i);
        const float64x2_t b = vld1q_f64(p + 2 * i + 2);
        acc0 = vfmaq_f64(acc0, a, a);
        acc1 = vfmaq_f64(acc1, b, b);
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) {
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return acc;
}

cplx dot_conj_neon(const cplx *a, const cplx *b, std::size_t n) {
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    float64x2_t acc_re = vdupq_n_f64(0.0);  // ar*br, ai*bi
    float64x2_t acc_im = vdupq_n_f64(0.0);  // ar*bi, ai*br
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t va = vld1q_f64(pa + 2 * i);
        const float64x2_t vb = vld1q_f64(pb + 2 * i);
        acc_re = vfmaq_f64(acc_re, va, vb);
        acc_im = vfmaq_f64(acc_im, va, vextq_f64(vb, vb, 1));
    }
    return {vaddvq_f64(acc_re), vgetq_lane_f64(acc_im, 0) - vgetq_lane_f64(acc_im, 1)};
}

void multiply_neon(cplx *x, const cplx *m, std::size_t n) {
    double *px = reinterpret_cast<double *>(x);
    const double *pm = reinterpret_cast<const double *>(m);
    const float64x2_t sign = {-1.0, 1.0};
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t vx = vld1q_f64(px + 2 * i);
        const float64x2_t vm = vld1q_f64(pm + 2 * i);
        const float64x2_t x_sw = vextq_f64(vx, vx, 1);  // [xi, xr]
        float64x2_t r = vmulq_laneq_f64(vx, vm, 0);     // [xr mr, xi mr]
        r = vfmaq_f64(r, vmulq_f64(x_sw, sign), vdupq_laneq_f64(vm, 1));
        vst1q_f64(px + 2 * i, r);
    }
}

void abs_sq_neon(const cplx *x, double *out, std::size_t n) {
    const double *p = reinterpret_cast<const double *>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t a = vld1q_f64(p + 2 * i);
        const float64x2_t b = vld1q_f64(p + 2 * i + 2);
        vst1q_f64(out + i, vpaddq_f64(vmulq_f64(a, a), vmulq_f64(b, b)));
    }
    for (; i < n; ++i) {
        out[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
}

void scale_neon(cplx *x, double s, std::size_t n) {
    double *p = reinterpret_cast<double *>(x);
    for (std::size_t i = 0; i < n; ++i) {
        vst1q_f64(p + 2 * i, vmulq_n_f64(vld1q_f64(p + 2 * i), s));
    }
}

void rotate_pair_neon(cplx *u, cplx *v, const double *a, const double *b, const double *c,
                      std::size_t n) {
    double *pu = reinterpret_cast<double *>(u);
    double *pv = reinterpret_cast<double *>(v);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t uu = vld1q_f64(pu + 2 * i);
        const float64x2_t vv = vld1q_f64(pv + 2 * i);
        const float64x2_t nu = vfmaq_n_f64(vmulq_n_f64(vv, b[i]), uu, a[i]);
        const float64x2_t nv = vfmsq_n_f64(vmulq_n_f64(vv, a[i]), uu, c[i]);
        vst1q_f64(pu + 2 * i, nu);
        vst1q_f64(pv + 2 * i, nv);
    }
}

}  // namespace

const KernelTable *neon_table_compiled() {
    static const KernelTable table{
        "neon",      norm_sq_sum_neon, dot_conj_neon,    multiply_neon,
        abs_sq_neon, scale_neon,       rotate_pair_neon,
    };
    return &table;
}

}  // namespace gwf::kernels

#else

namespace gwf::kernels {
const KernelTable *neon_table_compiled() {
    return nullptr;
}
}  // namespace gwf::kernels

#endif
