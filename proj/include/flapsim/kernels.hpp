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

#ifndef FLAPSIM_KERNELS_HPP
#define FLAPSIM_KERNELS_HPP

#include <cstddef>
#include <string_view>

namespace flapsim::kernels {

// Structure-of-arrays batch of strip states for one panel.
// All pointers hold n entries; vectors are split into per-axis arrays.
// u is the in-plane effective velocity, du its time derivative, c the chord
// unit vector, a the hinge axis unit vector (also the strip-plane normal;
// oriented so that positive pitch rate follows the panel's pitch sign
// convention).
struct StripBatchIn {
    const double* ux;
    const double* uy;
    const double* uz;
    const double* dux;
    const double* duy;
    const double* duz;
    const double* cx;
    const double* cy;
    const double* cz;
    const double* axx;
    const double* axy;
    const double* axz;
    const double* chord;
    const double* dr;
    double pitch_rate;  // hinge rate shared by the panel, rad/s
    double rho;         // kg/m^3
    double a_lift;      // A_L(Re)
    double a_drag;      // A_D(Re)
    double c_d0;        // C_D0(Re)
    double c_rot;       // C_r
    std::size_t n;
};

// Outputs per strip: the four force vectors, angle of attack, and the
// translational center-of-pressure chord fraction.
struct StripBatchOut {
    double* lift_x;
    double* lift_y;
    double* lift_z;
    double* drag_x;
    double* drag_y;
    double* drag_z;
    double* rot_x;
    double* rot_y;
    double* rot_z;
    double* add_x;
    double* add_y;
    double* add_z;
    double* alpha;
    double* cop_t;
};

using StripForcesFn = void (*)(const StripBatchIn&, const StripBatchOut&);

// Largest |windowed sum of (v - mean) * step| over all contiguous windows,
// via prefix-sum max minus min (includes the empty prefix).
using ExcursionFn = double (*)(const double* v, std::size_t n, double mean, double step);

// Largest pairwise distance among 3-D prefix points (px,py,pz), n points.
using DiameterFn = double (*)(const double* px, const double* py, const double* pz,
                              std::size_t n);

struct KernelSet {
    const char* name;
    StripForcesFn strip_forces;
    ExcursionFn excursion;
    DiameterFn diameter;
};

// Active set: picked once at startup from CPU features, overridable with
// FLAPSIM_KERNEL=scalar|avx2|neon.
const KernelSet& active();

const KernelSet& scalar_set();
const KernelSet* find(std::string_view name);  // nullptr if unavailable

}  // namespace flapsim::kernels

#endif  // FLAPSIM_KERNELS_HPP
