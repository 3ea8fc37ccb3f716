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

#include <cmath>

#include "kernels_detail.hpp"

namespace flapsim::kernels {

void strip_forces_scalar(const StripBatchIn& in, const StripBatchOut& out) {
    for (std::size_t i = 0; i < in.n; ++i) detail::strip_force_one(in, out, i);
}

double excursion_scalar(const double* v, std::size_t n, double mean, double step) {
    double prefix = 0.0;
    double hi = 0.0;  // empty prefix included
    double lo = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        prefix += (v[i] - mean) * step;
        if (prefix > hi) hi = prefix;
        if (prefix < lo) lo = prefix;
    }
    return hi - lo;
}

double diameter_scalar(const double* px, const double* py, const double* pz, std::size_t n) {
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double xi = px[i], yi = py[i], zi = pz[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = px[j] - xi, dy = py[j] - yi, dz = pz[j] - zi;
            const double d2 = dx * dx + dy * dy + dz * dz;
            if (d2 > best) best = d2;
        }
    }
    return std::sqrt(best);
}

const KernelSet& scalar_set() {
    static const KernelSet set{"scalar", &strip_forces_scalar, &excursion_scalar,
                               &diameter_scalar};
    return set;
}

}  // namespace flapsim::kernels
