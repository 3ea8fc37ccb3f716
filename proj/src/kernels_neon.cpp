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

// NEON (aarch64) variants, 2-wide f64. Mirrors the AVX2 kernel structure.

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include <cmath>

#include "kernels_detail.hpp"

namespace flapsim::kernels {

namespace {

inline float64x2_t sgn_f64(float64x2_t x) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    const float64x2_t one = vdupq_n_f64(1.0);
    const uint64x2_t pos = vcgtq_f64(x, zero);
    const uint64x2_t neg = vcltq_f64(x, zero);
    return vsubq_f64(vreinterpretq_f64_u64(vandq_u64(pos, vreinterpretq_u64_f64(one))),
                     vreinterpretq_f64_u64(vandq_u64(neg, vreinterpretq_u64_f64(one))));
}

inline float64x2_t acos_f64(float64x2_t x) {
    double lane[2];
    vst1q_f64(lane, x);
    lane[0] = std::acos(lane[0]);
    lane[1] = std::acos(lane[1]);
    return vld1q_f64(lane);
}

inline float64x2_t mask_f64(float64x2_t v, uint64x2_t m) {
    return vreinterpretq_f64_u64(vandq_u64(vreinterpretq_u64_f64(v), m));
}

}  // namespace

void strip_forces_neon(const StripBatchIn& in, const StripBatchOut& out) {
    const std::size_t n2 = in.n & ~std::size_t{1};
    const float64x2_t vzero = vdupq_n_f64(0.0);
    const float64x2_t vone = vdupq_n_f64(1.0);
    const float64x2_t veps = vdupq_n_f64(aero::kVelocityFloor);
    const float64x2_t vtiny = vdupq_n_f64(1e-12);

    for (std::size_t i = 0; i < n2; i += 2) {
        const float64x2_t ux = vld1q_f64(in.ux + i), uy = vld1q_f64(in.uy + i),
                          uz = vld1q_f64(in.uz + i);
        const float64x2_t dux = vld1q_f64(in.dux + i), duy = vld1q_f64(in.duy + i),
                          duz = vld1q_f64(in.duz + i);
        const float64x2_t cx = vld1q_f64(in.cx + i), cy = vld1q_f64(in.cy + i),
                          cz = vld1q_f64(in.cz + i);
        const float64x2_t ax = vld1q_f64(in.axx + i), ay = vld1q_f64(in.axy + i),
                          az = vld1q_f64(in.axz + i);
        const float64x2_t chord = vld1q_f64(in.chord + i), dr = vld1q_f64(in.dr + i);

        const float64x2_t un2 =
            vfmaq_f64(vfmaq_f64(vmulq_f64(uz, uz), uy, uy), ux, ux);
        const float64x2_t un = vsqrtq_f64(un2);
        const uint64x2_t live = vcgtq_f64(un, veps);
        const float64x2_t un_safe = vbslq_f64(live, un, vone);
        const float64x2_t inv_un = vdivq_f64(vone, un_safe);
        const float64x2_t hx = vmulq_f64(ux, inv_un), hy = vmulq_f64(uy, inv_un),
                          hz = vmulq_f64(uz, inv_un);

        float64x2_t cos_a = vfmaq_f64(vfmaq_f64(vmulq_f64(hz, cz), hy, cy), hx, cx);
        cos_a = vminq_f64(vone, vmaxq_f64(vnegq_f64(vone), cos_a));
        const float64x2_t sin2 = vmaxq_f64(vzero, vfmsq_f64(vone, cos_a, cos_a));
        const float64x2_t sin_a = vsqrtq_f64(sin2);
        const float64x2_t alpha = acos_f64(cos_a);

        const float64x2_t c_lt =
            vmulq_f64(vdupq_n_f64(in.a_lift), vmulq_f64(vaddq_f64(sin_a, sin_a), cos_a));
        const float64x2_t c_dt =
            vfmaq_f64(vdupq_n_f64(in.c_d0),
                      vsubq_f64(vdupq_n_f64(2.0), vaddq_f64(vmulq_f64(cos_a, cos_a),
                                                            vmulq_f64(cos_a, cos_a))),
                      vdupq_n_f64(in.a_drag));
        const float64x2_t q = vmulq_f64(
            vdupq_n_f64(0.5 * in.rho), vmulq_f64(chord, vmulq_f64(un2, dr)));

        float64x2_t lx = vfmsq_f64(vmulq_f64(hy, az), hz, ay);
        float64x2_t ly = vfmsq_f64(vmulq_f64(hz, ax), hx, az);
        float64x2_t lz = vfmsq_f64(vmulq_f64(hx, ay), hy, ax);
        const float64x2_t ln =
            vsqrtq_f64(vfmaq_f64(vfmaq_f64(vmulq_f64(lz, lz), ly, ly), lx, lx));
        const uint64x2_t l_ok = vcgtq_f64(ln, vtiny);
        const float64x2_t inv_ln = vdivq_f64(vone, vbslq_f64(l_ok, ln, vone));
        lx = mask_f64(vmulq_f64(lx, inv_ln), l_ok);
        ly = mask_f64(vmulq_f64(ly, inv_ln), l_ok);
        lz = mask_f64(vmulq_f64(lz, inv_ln), l_ok);
        const float64x2_t side =
            vnegq_f64(vfmaq_f64(vfmaq_f64(vmulq_f64(cz, lz), cy, ly), cx, lx));
        const float64x2_t sgn_l = sgn_f64(side);
        const float64x2_t fl = vmulq_f64(q, vmulq_f64(c_lt, sgn_l));
        const float64x2_t fd = vmulq_f64(q, c_dt);

        // rotational circulation: hinge rotation sense crossed with the flow
        const float64x2_t kr = vmulq_f64(vdupq_n_f64(in.rho * in.c_rot * in.pitch_rate),
                                         vmulq_f64(vmulq_f64(chord, chord), dr));
        const float64x2_t rx = vmulq_f64(kr, vfmsq_f64(vmulq_f64(ay, uz), az, uy));
        const float64x2_t ry = vmulq_f64(kr, vfmsq_f64(vmulq_f64(az, ux), ax, uz));
        const float64x2_t rz = vmulq_f64(kr, vfmsq_f64(vmulq_f64(ax, uy), ay, ux));

        float64x2_t mx = vfmsq_f64(vmulq_f64(cy, az), cz, ay);
        float64x2_t my = vfmsq_f64(vmulq_f64(cz, ax), cx, az);
        float64x2_t mz = vfmsq_f64(vmulq_f64(cx, ay), cy, ax);
        const float64x2_t mn =
            vsqrtq_f64(vfmaq_f64(vfmaq_f64(vmulq_f64(mz, mz), my, my), mx, mx));
        const uint64x2_t m_ok = vcgtq_f64(mn, vtiny);
        const float64x2_t inv_mn = vdivq_f64(vone, vbslq_f64(m_ok, mn, vone));
        mx = mask_f64(vmulq_f64(mx, inv_mn), m_ok);
        my = mask_f64(vmulq_f64(my, inv_mn), m_ok);
        mz = mask_f64(vmulq_f64(mz, inv_mn), m_ok);

        const float64x2_t u_du =
            vfmaq_f64(vfmaq_f64(vmulq_f64(uz, duz), uy, duy), ux, dux);
        const float64x2_t du_n = vsqrtq_f64(
            vfmaq_f64(vfmaq_f64(vmulq_f64(duz, duz), duy, duy), dux, dux));
        const float64x2_t mag_a =
            vmulq_f64(vmulq_f64(vdupq_n_f64(in.rho * M_PI * 0.25), vmulq_f64(chord, chord)),
                      vmulq_f64(vfmaq_f64(vmulq_f64(du_n, vmulq_f64(alpha, cos_a)),
                                          vmulq_f64(u_du, inv_un), sin_a),
                                dr));
        const float64x2_t press =
            vfmaq_f64(vfmaq_f64(vmulq_f64(uz, mz), uy, my), ux, mx);
        const float64x2_t fa = vmulq_f64(mag_a, sgn_f64(press));

        const auto masked_store = [&](double* dst, float64x2_t v) {
            vst1q_f64(dst, mask_f64(v, live));
        };
        masked_store(out.lift_x + i, vmulq_f64(fl, lx));
        masked_store(out.lift_y + i, vmulq_f64(fl, ly));
        masked_store(out.lift_z + i, vmulq_f64(fl, lz));
        masked_store(out.drag_x + i, vmulq_f64(fd, hx));
        masked_store(out.drag_y + i, vmulq_f64(fd, hy));
        masked_store(out.drag_z + i, vmulq_f64(fd, hz));
        masked_store(out.rot_x + i, rx);
        masked_store(out.rot_y + i, ry);
        masked_store(out.rot_z + i, rz);
        masked_store(out.add_x + i, vmulq_f64(fa, mx));
        masked_store(out.add_y + i, vmulq_f64(fa, my));
        masked_store(out.add_z + i, vmulq_f64(fa, mz));
        masked_store(out.alpha + i, alpha);
        masked_store(out.cop_t + i, vmulq_f64(alpha, vdupq_n_f64(1.0 / M_PI)));
    }
    for (std::size_t i = n2; i < in.n; ++i) detail::strip_force_one(in, out, i);
}

double excursion_neon(const double* v, std::size_t n, double mean, double step) {
    // serial prefix, vector-free; kept for dispatch symmetry
    double prefix = 0.0, hi = 0.0, lo = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        prefix += (v[i] - mean) * step;
        if (prefix > hi) hi = prefix;
        if (prefix < lo) lo = prefix;
    }
    return hi - lo;
}

double diameter_neon(const double* px, const double* py, const double* pz, std::size_t n) {
    float64x2_t vbest = vdupq_n_f64(0.0);
    double best_tail = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const float64x2_t xi = vdupq_n_f64(px[i]);
        const float64x2_t yi = vdupq_n_f64(py[i]);
        const float64x2_t zi = vdupq_n_f64(pz[i]);
        std::size_t j = i + 1;
        for (; j + 2 <= n; j += 2) {
            const float64x2_t dx = vsubq_f64(vld1q_f64(px + j), xi);
            const float64x2_t dy = vsubq_f64(vld1q_f64(py + j), yi);
            const float64x2_t dz = vsubq_f64(vld1q_f64(pz + j), zi);
            const float64x2_t d2 =
                vfmaq_f64(vfmaq_f64(vmulq_f64(dz, dz), dy, dy), dx, dx);
            vbest = vmaxq_f64(vbest, d2);
        }
        for (; j < n; ++j) {
            const double dx = px[j] - px[i], dy = py[j] - py[i], dz = pz[j] - pz[i];
            const double d2 = dx * dx + dy * dy + dz * dz;
            if (d2 > best_tail) best_tail = d2;
        }
    }
    double lane[2];
    vst1q_f64(lane, vbest);
    return std::sqrt(std::max(best_tail, std::max(lane[0], lane[1])));
}

const KernelSet& neon_set() {
    static const KernelSet set{"neon", &strip_forces_neon, &excursion_neon, &diameter_neon};
    return set;
}

}  // namespace flapsim::kernels

#endif  // aarch64
