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

#include <gtest/gtest.h>

#include <random>

#include "gwfield/kernels.hpp"

namespace {

using gwf::kernels::cplx;
using gwf::kernels::KernelTable;

std::vector<cplx> random_complex(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto &x : v) {
        x = {u(rng), u(rng)};
    }
    return v;
}

std::vector<double> random_real(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> v(n);
    for (auto &x : v) {
        x = u(rng);
    }
    return v;
}

// Lengths chosen to exercise every vector-width remainder.
const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 33, 257, 1023};

class KernelEquivalence : public ::testing::TestWithParam<const KernelTable *> {};

TEST_P(KernelEquivalence, NormSqSum) {
    const KernelTable &ref = gwf::kernels::scalar_table();
    for (std::size_t n : kLengths) {
        const auto x = random_complex(n, 1 + n);
        const double a = ref.norm_sq_sum(x.data(), n);
        const double b = GetParam()->norm_sq_sum(x.data(), n);
        EXPECT_NEAR(a, b, 1e-13 * (1.0 + a)) << "n=" << n;
    }
}

TEST_P(KernelEquivalence, DotConj) {
    const KernelTable &ref = gwf::kernels::scalar_table();
    for (std::size_t n : kLengths) {
        const auto x = random_complex(n, 2 + n);
        const auto y = random_complex(n, 3 + n);
        const cplx a = ref.dot_conj(x.data(), y.data(), n);
        const cplx b = GetParam()->dot_conj(x.data(), y.data(), n);
        EXPECT_NEAR(std::abs(a - b), 0.0, 1e-13 * (1.0 + static_cast<double>(n))) << "n=" << n;
    }
}

TEST_P(KernelEquivalence, Multiply) {
    const KernelTable &ref = gwf::kernels::scalar_table();
    for (std::size_t n : kLengths) {
        auto x1 = random_complex(n, 4 + n);
        auto x2 = x1;
        const auto m = random_complex(n, 5 + n);
        ref.multiply(x1.data(), m.data(), n);
        GetParam()->multiply(x2.data(), m.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_NEAR(std::abs(x1[i] - x2[i]), 0.0, 1e-15) << "n=" << n << " i=" << i;
        }
    }
}

TEST_P(KernelEquivalence, AbsSq) {
    const KernelTable &ref = gwf::kernels::scalar_table();
    for (std::size_t n : kLengths) {
        const auto x = random_complex(n, 6 + n);
        std::vector<double> a(n), b(n);
        ref.abs_sq(x.data(), a.data(), n);
        GetParam()->abs_sq(x.data(), b.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_NEAR(a[i], b[i], 1e-15) << "n=" << n << " i=" << i;
        }
    }
}

TEST_P(KernelEquivalence, Scale) {
    const KernelTable &ref = gwf::kernels::scalar_table();
    for (std::size_t n : kLengths) {
        auto x1 = random_complex(n, 7 + n);
        auto x2 = x1;
        ref.scale(x1.data(), -1.75, n);
        GetParam()->scale(x2.data(), -1.75, n);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_EQ(x1[i], x2[i]) << "n=" << n << " i=" << i;
        }
    }
}

TEST_P(KernelEquivalence, RotatePair) {
    const KernelTable &ref = gwf::kernels::scalar_table();
    for (std::size_t n : kLengths) {
        auto u1 = random_complex(n, 8 + n);
        auto v1 = random_complex(n, 9 + n);
        auto u2 = u1;
        auto v2 = v1;
        const auto a = random_real(n, 10 + n);
        const auto b = random_real(n, 11 + n);
        const auto c = random_real(n, 12 + n);
        ref.rotate_pair(u1.data(), v1.data(), a.data(), b.data(), c.data(), n);
        GetParam()->rotate_pair(u2.data(), v2.data(), a.data(), b.data(), c.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_NEAR(std::abs(u1[i] - u2[i]), 0.0, 1e-14) << "n=" << n << " i=" << i;
            EXPECT_NEAR(std::abs(v1[i] - v2[i]), 0.0, 1e-14) << "n=" << n << " i=" << i;
        }
    }
}

INSTANTIATE_TEST_SUITE_P(AllTables, KernelEquivalence,
                         ::testing::ValuesIn(gwf::kernels::available_tables()),
                         [](const auto &info) { return std::string(info.param->name); });

TEST(KernelDispatch, ActiveTableIsAvailable) {
    const auto tables = gwf::kernels::available_tables();
    ASSERT_FALSE(tables.empty());
    EXPECT_STREQ(tables.front()->name, "scalar");
    bool found = false;
    for (const auto *t : tables) {
        found = found || t == &gwf::kernels::active();
    }
    EXPECT_TRUE(found);
}

}  // namespace
