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

#include "gwfield/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "gwfield/error.hpp"
#include "gwfield/kernels.hpp"

namespace gwf::spectral {
namespace {

// FFTW planning is not thread-safe; execution with the new-array interface is.
// Plans are created once per (shape, direction) and never destroyed.
class PlanCache {
   public:
    fftw_plan get(const Grid &grid, int sign) {
        const auto key = std::make_tuple(grid.n(0), grid.n(1), grid.n(2), sign);
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(key);
        if (it != plans_.end()) {
            return it->second;
        }
        int dims[kMaxDim];
        for (int a = 0; a < grid.dim(); ++a) {
            dims[a] = static_cast<int>(grid.n(a));
        }
        auto *buf = fftw_alloc_complex(grid.size());
        fftw_plan plan = fftw_plan_dft(grid.dim(), dims, buf, buf, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        if (plan == nullptr) {
            fail_numerical("FFTW could not create a plan");
        }
        plans_.emplace(key, plan);
        return plan;
    }

    fftw_plan get_1d(std::size_t n, int sign) {
        const auto key = std::make_tuple(n, std::size_t{0}, std::size_t{0}, sign);
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_1d_.find(key);
        if (it != plans_1d_.end()) {
            return it->second;
        }
        auto *buf = fftw_alloc_complex(n);
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        if (plan == nullptr) {
            fail_numerical("FFTW could not create a plan");
        }
        plans_1d_.emplace(key, plan);
        return plan;
    }

   private:
    using Key = std::tuple<std::size_t, std::size_t, std::size_t, int>;
    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
    std::map<Key, fftw_plan> plans_1d_;
};

PlanCache &plan_cache() {
    static PlanCache cache;
    return cache;
}

void transform_in_place(const Grid &grid, std::vector<cplx> &data, int sign) {
    fftw_plan plan = plan_cache().get(grid, sign);
    auto *p = reinterpret_cast<fftw_complex *>(data.data());
    fftw_execute_dft(plan, p, p);
}

void check_size(const Grid &grid, std::size_t n) {
    if (n != grid.size()) {
        fail_argument("array size does not match grid");
    }
}

}  // namespace

std::vector<cplx> forward(const Grid &grid, std::span<const cplx> values) {
    check_size(grid, values.size());
    std::vector<cplx> out(values.begin(), values.end());
    transform_in_place(grid, out, FFTW_FORWARD);
    return out;
}

std::vector<cplx> inverse(const Grid &grid, std::span<const cplx> coeffs) {
    check_size(grid, coeffs.size());
    std::vector<cplx> out(coeffs.begin(), coeffs.end());
    transform_in_place(grid, out, FFTW_BACKWARD);
    kernels::scale(out, 1.0 / static_cast<double>(grid.size()));
    return out;
}

std::vector<cplx> coefficients(const ComplexField &psi) {
    const Grid &grid = psi.grid();
    auto out = forward(grid, psi.values());
    kernels::scale(out, std::sqrt(grid.volume()) / static_cast<double>(grid.size()));
    return out;
}

std::vector<cplx> apply_multiplier(const Grid &grid, std::span<const cplx> values,
                                   std::span<const cplx> multiplier) {
    check_size(grid, multiplier.size());
    auto spec = forward(grid, values);
    kernels::multiply(spec, multiplier);
    transform_in_place(grid, spec, FFTW_BACKWARD);
    kernels::scale(spec, 1.0 / static_cast<double>(grid.size()));
    return spec;
}

namespace {

std::vector<cplx> axis_multiplier(const Grid &grid, int axis, int order) {
    std::vector<cplx> m(grid.size());
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
        const std::size_t i = grid.unravel(flat)[axis];
        const double k = grid.wavenumber(axis, i);
        if (order == 1) {
            m[flat] = grid.is_nyquist(axis, i) ? cplx{0.0, 0.0} : cplx{0.0, k};
        } else {
            m[flat] = cplx{-k * k, 0.0};
        }
    }
    return m;
}

std::vector<double> real_part(const std::vector<cplx> &v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].real();
    }
    return out;
}

std::vector<cplx> as_complex(std::span<const double> v) {
    return std::vector<cplx>(v.begin(), v.end());
}

}  // namespace

std::vector<cplx> derivative(const Grid &grid, std::span<const cplx> values, int axis) {
    if (axis < 0 || axis >= grid.dim()) {
        fail_argument("derivative axis out of range");
    }
    return apply_multiplier(grid, values, axis_multiplier(grid, axis, 1));
}

std::vector<cplx> second_derivative(const Grid &grid, std::span<const cplx> values, int axis) {
    if (axis < 0 || axis >= grid.dim()) {
        fail_argument("derivative axis out of range");
    }
    return apply_multiplier(grid, values, axis_multiplier(grid, axis, 2));
}

std::vector<cplx> laplacian(const Grid &grid, std::span<const cplx> values) {
    const auto k2 = grid.k_squared();
    std::vector<cplx> m(k2.size());
    for (std::size_t i = 0; i < k2.size(); ++i) {
        m[i] = -k2[i];
    }
    return apply_multiplier(grid, values, m);
}

std::vector<cplx> laplacian_denoised(const Grid &grid, std::span<const cplx> values,
                                     double drop_below) {
    auto spec = forward(grid, values);
    const auto k2 = grid.k_squared();
    double peak = 0.0;
    for (const cplx &v : spec) {
        peak = std::max(peak, std::abs(v));
    }
    for (std::size_t i = 0; i < spec.size(); ++i) {
        spec[i] = std::abs(spec[i]) < drop_below * peak ? cplx{0.0, 0.0} : -k2[i] * spec[i];
    }
    return inverse(grid, spec);
}

void dft_1d(std::span<cplx> data, bool inverse) {
    if (data.empty()) {
        return;
    }
    fftw_plan plan = plan_cache().get_1d(data.size(), inverse ? FFTW_BACKWARD : FFTW_FORWARD);
    auto *p = reinterpret_cast<fftw_complex *>(data.data());
    fftw_execute_dft(plan, p, p);
}

std::vector<double> derivative(const Grid &grid, std::span<const double> values, int axis) {
    const auto c = as_complex(values);
    return real_part(derivative(grid, std::span<const cplx>(c), axis));
}

std::vector<double> laplacian(const Grid &grid, std::span<const double> values) {
    const auto c = as_complex(values);
    return real_part(laplacian(grid, std::span<const cplx>(c)));
}

}  // namespace gwf::spectral
