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

#include "gwfield/kernels.hpp"

namespace gwf::kernels {
namespace {

double norm_sq_sum_scalar(const cplx *x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return acc;
}

cplx dot_conj_scalar(const cplx *a, const cplx *b, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

void multiply_scalar(cplx *x, const cplx *m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real();
        const double xi = x[i].imag();
        x[i] = {xr * m[i].real() - xi * m[i].imag(), xr * m[i].imag() + xi * m[i].real()};
    }
}

void abs_sq_scalar(const cplx *x, double *out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
}

void scale_scalar(cplx *x, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = {x[i].real() * s, x[i].imag() * s};
    }
}

void rotate_pair_scalar(cplx *u, cplx *v, const double *a, const double *b, const double *c,
                        std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx ui = u[i];
        const cplx vi = v[i];
        u[i] = a[i] * ui + b[i] * vi;
        v[i] = -c[i] * ui + a[i] * vi;
    }
}

}  // namespace

const KernelTable &scalar_table() {
    static const KernelTable table{
        "scalar",          norm_sq_sum_scalar, dot_conj_scalar,   multiply_scalar,
        abs_sq_scalar,     scale_scalar,       rotate_pair_scalar,
    };
    return table;
}

}  // namespace gwf::kernels
