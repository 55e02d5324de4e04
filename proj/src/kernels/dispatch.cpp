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

#include <cstdlib>
#include <string_view>

#include "gwfield/error.hpp"
#include "kernels_variants.hpp"

namespace gwf::kernels {
namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable &select_table() {
    const char *forced = std::getenv("GWFIELD_KERNELS");
    const std::string_view want = forced ? forced : "auto";
    if (want == "scalar") {
        return scalar_table();
    }
    if (want == "avx2" || want == "neon") {
        const KernelTable *t = want == "avx2" ? avx2_table() : neon_table();
        if (t == nullptr) {
            fail_argument("GWFIELD_KERNELS requests an unavailable kernel table",
                          std::string(want));
        }
        return *t;
    }
    if (want != "auto") {
        fail_argument("GWFIELD_KERNELS must be one of auto, scalar, avx2, neon",
                      std::string(want));
    }
    if (const KernelTable *t = avx2_table()) {
        return *t;
    }
    if (const KernelTable *t = neon_table()) {
        return *t;
    }
    return scalar_table();
}

}  // namespace

const KernelTable *avx2_table() {
    static const KernelTable *table = cpu_has_avx2_fma() ? avx2_table_compiled() : nullptr;
    return table;
}

const KernelTable *neon_table() {
    // NEON is architecturally mandatory on aarch64.
    return neon_table_compiled();
}

std::vector<const KernelTable *> available_tables() {
    std::vector<const KernelTable *> out{&scalar_table()};
    if (const KernelTable *t = avx2_table()) {
        out.push_back(t);
    }
    if (const KernelTable *t = neon_table()) {
        out.push_back(t);
    }
    return out;
}

const KernelTable &active() {
    static const KernelTable &table = select_table();
    return table;
}

}  // namespace gwf::kernels
