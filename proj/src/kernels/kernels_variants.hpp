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

#include "gwfield/kernels.hpp"

namespace gwf::kernels {

// Each returns nullptr when its translation unit was built without the
// required target features. Runtime CPU checks happen in dispatch.cpp.
const KernelTable *avx2_table_compiled();
const KernelTable *neon_table_compiled();

}  // namespace gwf::kernels
