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


#include <cstdio>

#include "gwfield/selfcheck.hpp"

int main() {
    int failed = 0;
    for (int id = 1; id <= gwf::selfcheck::count(); ++id) {
        const auto r = gwf::selfcheck::run(id);
        std::printf("%s\n", gwf::selfcheck::format_line(r).c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    }
    std::printf("%d of %d criteria passed\n", gwf::selfcheck::count() - failed, gwf::selfcheck::count());
    return failed == 0 ? 0 : 1;
}
