// Copyright 2026 The flapsim Authors
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

#include "flapsim/kernels.hpp"

namespace flapsim::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const KernelSet& avx2_set();
static bool avx2_supported() { return __builtin_cpu_supports("avx2"); }
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
const KernelSet& neon_set();
#endif

const KernelSet* find(std::string_view name) {
    if (name == "scalar") return &scalar_set();
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2" && avx2_supported()) return &avx2_set();
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
    if (name == "neon") return &neon_set();
#endif
    return nullptr;
}

static const KernelSet& pick() {
    if (const char* env = std::getenv("FLAPSIM_KERNEL")) {
        if (const KernelSet* s = find(env)) return *s;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) return avx2_set();
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
    return neon_set();
#endif
    return scalar_set();
}

const KernelSet& active() {
    static const KernelSet& set = pick();
    return set;
}

}  // namespace flapsim::kernels
