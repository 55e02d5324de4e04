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

// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma;
// nothing here may run before dispatch has confirmed CPU support.

#include "kernels_variants.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace gwf::kernels {
namespace {

// One __m256d holds two complex values laid out [re0, im0, re1, im1].

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// [c0, c1] -> [c0, c0, c1, c1]
inline __m256d widen_pair(const double *p) {
    return _mm256_permute4x64_pd(_mm256_castpd128_pd256(_mm_loadu_pd(p)), 0b01010000);
}

double norm_sq_sum_avx2(const cplx *x, std::size_t n) {
    const double *p = reinterpret_cast<const double *>(x);
    const std::size_t m = 2 * n;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= m; i += 8) {
        const __m256d a = _mm256_loadu_pd(p + i);
        const __m256d b = _mm256_loadu_pd(p + i + 4);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
        acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < m; ++i) {
        acc += p[i] * p[i];
    }
    return acc;
}

cplx dot_conj_avx2(const cplx *a, const cplx *b, std::size_t n) {
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    __m256d acc_re = _mm256_setzero_pd();  // ar*br, ai*bi
    __m256d acc_im = _mm256_setzero_pd();  // ar*bi, ai*br
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        acc_im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im);
    }
    alignas(32) double im_lanes[4];
    _mm256_store_pd(im_lanes, acc_im);
    double re = hsum(acc_re);
    double im = (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3]);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

inline __m256d complex_mul(__m256d x, __m256d m) {
    const __m256d m_re = _mm256_movedup_pd(m);           // [mr0, mr0, mr1, mr1]
    const __m256d m_im = _mm256_permute_pd(m, 0b1111);   // [mi0, mi0, mi1, mi1]
    const __m256d x_sw = _mm256_permute_pd(x, 0b0101);   // [xi0, xr0, xi1, xr1]
    return _mm256_fmaddsub_pd(x, m_re, _mm256_mul_pd(x_sw, m_im));
}

void multiply_avx2(cplx *x, const cplx *m, std::size_t n) {
    double *px = reinterpret_cast<double *>(x);
    const double *pm = reinterpret_cast<const double *>(m);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(px + 2 * i);
        const __m256d vm = _mm256_loadu_pd(pm + 2 * i);
        _mm256_storeu_pd(px + 2 * i, complex_mul(vx, vm));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real();
        const double xi = x[i].imag();
        x[i] = {xr * m[i].real() - xi * m[i].imag(), xr * m[i].imag() + xi * m[i].real()};
    }
}

void abs_sq_avx2(const cplx *x, double *out, std::size_t n) {
    const double *p = reinterpret_cast<const double *>(x);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(p + 2 * i);
        const __m256d b = _mm256_loadu_pd(p + 2 * i + 4);
        // hadd -> [|a0|^2, |b0|^2, |a1|^2, |b1|^2]
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
        _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0b11011000));
    }
    for (; i < n; ++i) {
        out[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
}

void scale_avx2(cplx *x, double s, std::size_t n) {
    double *p = reinterpret_cast<double *>(x);
    const __m256d vs = _mm256_set1_pd(s);
    const std::size_t m = 2 * n;
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), vs));
    }
    for (; i < m; ++i) {
        p[i] *= s;
    }
}

void rotate_pair_avx2(cplx *u, cplx *v, const double *a, const double *b, const double *c,
                      std::size_t n) {
    double *pu = reinterpret_cast<double *>(u);
    double *pv = reinterpret_cast<double *>(v);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = widen_pair(a + i);
        const __m256d vb = widen_pair(b + i);
        const __m256d vc = widen_pair(c + i);
        const __m256d uu = _mm256_loadu_pd(pu + 2 * i);
        const __m256d vv = _mm256_loadu_pd(pv + 2 * i);
        _mm256_storeu_pd(pu + 2 * i, _mm256_fmadd_pd(va, uu, _mm256_mul_pd(vb, vv)));
        _mm256_storeu_pd(pv + 2 * i, _mm256_fnmadd_pd(vc, uu, _mm256_mul_pd(va, vv)));
    }
    for (; i < n; ++i) {
        const cplx ui = u[i];
        const cplx vi = v[i];
        u[i] = a[i] * ui + b[i] * vi;
        v[i] = -c[i] * ui + a[i] * vi;
    }
}

}  // namespace

const KernelTable *avx2_table_compiled() {
    static const KernelTable table{
        "avx2",      norm_sq_sum_avx2, dot_conj_avx2,    multiply_avx2,
        abs_sq_avx2, scale_avx2,       rotate_pair_avx2,
    };
    return &table;
}

}  // namespace gwf::kernels

#else

namespace gwf::kernels {
const KernelTable *avx2_table_compiled() {
    return nullptr;
}
}  // namespace gwf::kernels

#endif
