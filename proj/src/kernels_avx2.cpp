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

// AVX2 variants of the strip-force and reduction kernels. This translation
// unit is compiled with -mavx2 -mfma and must only be entered after the
// dispatcher has confirmed CPU support.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "kernels_detail.hpp"

namespace flapsim::kernels {

namespace {

inline __m256d sgn_pd(__m256d x) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d pos = _mm256_and_pd(_mm256_cmp_pd(x, zero, _CMP_GT_OQ), one);
    const __m256d neg = _mm256_and_pd(_mm256_cmp_pd(zero, x, _CMP_GT_OQ), one);
    return _mm256_sub_pd(pos, neg);
}

inline __m256d acos_pd(__m256d x) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, x);
    lane[0] = std::acos(lane[0]);
    lane[1] = std::acos(lane[1]);
    lane[2] = std::acos(lane[2]);
    lane[3] = std::acos(lane[3]);
    return _mm256_load_pd(lane);
}

}  // namespace

void strip_forces_avx2(const StripBatchIn& in, const StripBatchOut& out) {
    const std::size_t n4 = in.n & ~std::size_t{3};
    const __m256d vzero = _mm256_setzero_pd();
    const __m256d vone = _mm256_set1_pd(1.0);
    const __m256d veps = _mm256_set1_pd(aero::kVelocityFloor);
    const __m256d vtiny = _mm256_set1_pd(1e-12);
    const __m256d vrho = _mm256_set1_pd(in.rho);
    const __m256d val = _mm256_set1_pd(in.a_lift);
    const __m256d vad = _mm256_set1_pd(in.a_drag);
    const __m256d vcd0 = _mm256_set1_pd(in.c_d0);
    const __m256d vkrot = _mm256_set1_pd(in.rho * in.c_rot * in.pitch_rate);
    const __m256d vinvpi = _mm256_set1_pd(1.0 / M_PI);
    const __m256d vquarterpi = _mm256_set1_pd(M_PI * 0.25);

    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d ux = _mm256_loadu_pd(in.ux + i);
        const __m256d uy = _mm256_loadu_pd(in.uy + i);
        const __m256d uz = _mm256_loadu_pd(in.uz + i);
        const __m256d dux = _mm256_loadu_pd(in.dux + i);
        const __m256d duy = _mm256_loadu_pd(in.duy + i);
        const __m256d duz = _mm256_loadu_pd(in.duz + i);
        const __m256d cx = _mm256_loadu_pd(in.cx + i);
        const __m256d cy = _mm256_loadu_pd(in.cy + i);
        const __m256d cz = _mm256_loadu_pd(in.cz + i);
        const __m256d ax = _mm256_loadu_pd(in.axx + i);
        const __m256d ay = _mm256_loadu_pd(in.axy + i);
        const __m256d az = _mm256_loadu_pd(in.axz + i);
        const __m256d chord = _mm256_loadu_pd(in.chord + i);
        const __m256d dr = _mm256_loadu_pd(in.dr + i);

        const __m256d un2 = _mm256_fmadd_pd(
            ux, ux, _mm256_fmadd_pd(uy, uy, _mm256_mul_pd(uz, uz)));
        const __m256d un = _mm256_sqrt_pd(un2);
        const __m256d live = _mm256_cmp_pd(un, veps, _CMP_GT_OQ);
        // guard the divide on still lanes
        const __m256d un_safe = _mm256_blendv_pd(vone, un, live);
        const __m256d inv_un = _mm256_div_pd(vone, un_safe);
        const __m256d hx = _mm256_mul_pd(ux, inv_un);
        const __m256d hy = _mm256_mul_pd(uy, inv_un);
        const __m256d hz = _mm256_mul_pd(uz, inv_un);

        __m256d cos_a = _mm256_fmadd_pd(hx, cx, _mm256_fmadd_pd(hy, cy, _mm256_mul_pd(hz, cz)));
        cos_a = _mm256_min_pd(vone, _mm256_max_pd(_mm256_sub_pd(vzero, vone), cos_a));
        const __m256d sin2 = _mm256_max_pd(vzero, _mm256_fnmadd_pd(cos_a, cos_a, vone));
        const __m256d sin_a = _mm256_sqrt_pd(sin2);
        const __m256d alpha = acos_pd(cos_a);

        const __m256d c_lt =
            _mm256_mul_pd(val, _mm256_mul_pd(_mm256_add_pd(sin_a, sin_a), cos_a));
        const __m256d c_dt = _mm256_fmadd_pd(
            vad, _mm256_sub_pd(_mm256_set1_pd(2.0), _mm256_add_pd(_mm256_mul_pd(cos_a, cos_a),
                                                                  _mm256_mul_pd(cos_a, cos_a))),
            vcd0);
        const __m256d q = _mm256_mul_pd(
            _mm256_set1_pd(0.5),
            _mm256_mul_pd(vrho, _mm256_mul_pd(chord, _mm256_mul_pd(un2, dr))));

        // lift direction = unit(u_hat x axis), toward the leading-edge side
        __m256d lx = _mm256_fmsub_pd(hy, az, _mm256_mul_pd(hz, ay));
        __m256d ly = _mm256_fmsub_pd(hz, ax, _mm256_mul_pd(hx, az));
        __m256d lz = _mm256_fmsub_pd(hx, ay, _mm256_mul_pd(hy, ax));
        const __m256d ln2 = _mm256_fmadd_pd(lx, lx, _mm256_fmadd_pd(ly, ly, _mm256_mul_pd(lz, lz)));
        const __m256d ln = _mm256_sqrt_pd(ln2);
        const __m256d l_ok = _mm256_cmp_pd(ln, vtiny, _CMP_GT_OQ);
        const __m256d inv_ln = _mm256_div_pd(vone, _mm256_blendv_pd(vone, ln, l_ok));
        lx = _mm256_and_pd(_mm256_mul_pd(lx, inv_ln), l_ok);
        ly = _mm256_and_pd(_mm256_mul_pd(ly, inv_ln), l_ok);
        lz = _mm256_and_pd(_mm256_mul_pd(lz, inv_ln), l_ok);
        const __m256d side = _mm256_sub_pd(
            vzero, _mm256_fmadd_pd(cx, lx, _mm256_fmadd_pd(cy, ly, _mm256_mul_pd(cz, lz))));
        const __m256d sgn_l = sgn_pd(side);
        const __m256d fl = _mm256_mul_pd(q, _mm256_mul_pd(c_lt, sgn_l));
        const __m256d fd = _mm256_mul_pd(q, c_dt);

        // rotational circulation: hinge rotation sense crossed with the flow
        const __m256d kr =
            _mm256_mul_pd(vkrot, _mm256_mul_pd(_mm256_mul_pd(chord, chord), dr));
        const __m256d rx =
            _mm256_mul_pd(kr, _mm256_fmsub_pd(ay, uz, _mm256_mul_pd(az, uy)));
        const __m256d ry =
            _mm256_mul_pd(kr, _mm256_fmsub_pd(az, ux, _mm256_mul_pd(ax, uz)));
        const __m256d rz =
            _mm256_mul_pd(kr, _mm256_fmsub_pd(ax, uy, _mm256_mul_pd(ay, ux)));

        // chord-normal for the added-mass reaction
        __m256d mx = _mm256_fmsub_pd(cy, az, _mm256_mul_pd(cz, ay));
        __m256d my = _mm256_fmsub_pd(cz, ax, _mm256_mul_pd(cx, az));
        __m256d mz = _mm256_fmsub_pd(cx, ay, _mm256_mul_pd(cy, ax));
        const __m256d mn2 = _mm256_fmadd_pd(mx, mx, _mm256_fmadd_pd(my, my, _mm256_mul_pd(mz, mz)));
        const __m256d mn = _mm256_sqrt_pd(mn2);
        const __m256d m_ok = _mm256_cmp_pd(mn, vtiny, _CMP_GT_OQ);
        const __m256d inv_mn = _mm256_div_pd(vone, _mm256_blendv_pd(vone, mn, m_ok));
        mx = _mm256_and_pd(_mm256_mul_pd(mx, inv_mn), m_ok);
        my = _mm256_and_pd(_mm256_mul_pd(my, inv_mn), m_ok);
        mz = _mm256_and_pd(_mm256_mul_pd(mz, inv_mn), m_ok);

        const __m256d u_du =
            _mm256_fmadd_pd(ux, dux, _mm256_fmadd_pd(uy, duy, _mm256_mul_pd(uz, duz)));
        const __m256d du_n = _mm256_sqrt_pd(
            _mm256_fmadd_pd(dux, dux, _mm256_fmadd_pd(duy, duy, _mm256_mul_pd(duz, duz))));
        const __m256d mag_a = _mm256_mul_pd(
            _mm256_mul_pd(vquarterpi, _mm256_mul_pd(vrho, _mm256_mul_pd(chord, chord))),
            _mm256_mul_pd(
                _mm256_fmadd_pd(_mm256_mul_pd(u_du, inv_un), sin_a,
                                _mm256_mul_pd(du_n, _mm256_mul_pd(alpha, cos_a))),
                dr));
        const __m256d press =
            _mm256_fmadd_pd(ux, mx, _mm256_fmadd_pd(uy, my, _mm256_mul_pd(uz, mz)));
        const __m256d fa = _mm256_mul_pd(mag_a, sgn_pd(press));

        const auto masked_store = [&](double* dst, __m256d v) {
            _mm256_storeu_pd(dst, _mm256_and_pd(v, live));
        };
        masked_store(out.lift_x + i, _mm256_mul_pd(fl, lx));
        masked_store(out.lift_y + i, _mm256_mul_pd(fl, ly));
        masked_store(out.lift_z + i, _mm256_mul_pd(fl, lz));
        masked_store(out.drag_x + i, _mm256_mul_pd(fd, hx));
        masked_store(out.drag_y + i, _mm256_mul_pd(fd, hy));
        masked_store(out.drag_z + i, _mm256_mul_pd(fd, hz));
        masked_store(out.rot_x + i, rx);
        masked_store(out.rot_y + i, ry);
        masked_store(out.rot_z + i, rz);
        masked_store(out.add_x + i, _mm256_mul_pd(fa, mx));
        masked_store(out.add_y + i, _mm256_mul_pd(fa, my));
        masked_store(out.add_z + i, _mm256_mul_pd(fa, mz));
        masked_store(out.alpha + i, alpha);
        masked_store(out.cop_t + i, _mm256_mul_pd(alpha, vinvpi));
    }
    for (std::size_t i = n4; i < in.n; ++i) detail::strip_force_one(in, out, i);
}

double excursion_avx2(const double* v, std::size_t n, double mean, double step) {
    // The prefix scan is inherently serial; run it in blocks of 4 with a
    // carried offset so the min/max reduction vectorizes.
    const std::size_t n4 = n & ~std::size_t{3};
    double carry = 0.0;
    __m256d vhi = _mm256_setzero_pd();
    __m256d vlo = _mm256_setzero_pd();
    const __m256d vmean = _mm256_set1_pd(mean);
    const __m256d vstep = _mm256_set1_pd(step);
    for (std::size_t i = 0; i < n4; i += 4) {
        __m256d x = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(v + i), vmean), vstep);
        // inclusive in-register prefix sum
        __m256d t = _mm256_permute4x64_pd(x, _MM_SHUFFLE(2, 1, 0, 3));
        t = _mm256_blend_pd(t, _mm256_setzero_pd(), 0x1);
        x = _mm256_add_pd(x, t);
        t = _mm256_permute4x64_pd(x, _MM_SHUFFLE(1, 0, 3, 2));
        t = _mm256_blend_pd(t, _mm256_setzero_pd(), 0x3);
        x = _mm256_add_pd(x, t);
        x = _mm256_add_pd(x, _mm256_set1_pd(carry));
        vhi = _mm256_max_pd(vhi, x);
        vlo = _mm256_min_pd(vlo, x);
        alignas(32) double lane[4];
        _mm256_store_pd(lane, x);
        carry = lane[3];
    }
    alignas(32) double hi4[4], lo4[4];
    _mm256_store_pd(hi4, vhi);
    _mm256_store_pd(lo4, vlo);
    double hi = std::max(std::max(hi4[0], hi4[1]), std::max(hi4[2], hi4[3]));
    double lo = std::min(std::min(lo4[0], lo4[1]), std::min(lo4[2], lo4[3]));
    double prefix = carry;
    for (std::size_t i = n4; i < n; ++i) {
        prefix += (v[i] - mean) * step;
        if (prefix > hi) hi = prefix;
        if (prefix < lo) lo = prefix;
    }
    return hi - lo;
}

double diameter_avx2(const double* px, const double* py, const double* pz, std::size_t n) {
    __m256d vbest = _mm256_setzero_pd();
    double best_tail = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const __m256d xi = _mm256_set1_pd(px[i]);
        const __m256d yi = _mm256_set1_pd(py[i]);
        const __m256d zi = _mm256_set1_pd(pz[i]);
        std::size_t j = i + 1;
        for (; j + 4 <= n; j += 4) {
            const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(px + j), xi);
            const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(py + j), yi);
            const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(pz + j), zi);
            const __m256d d2 =
                _mm256_fmadd_pd(dx, dx, _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dz, dz)));
            vbest = _mm256_max_pd(vbest, d2);
        }
        for (; j < n; ++j) {
            const double dx = px[j] - px[i], dy = py[j] - py[i], dz = pz[j] - pz[i];
            const double d2 = dx * dx + dy * dy + dz * dz;
            if (d2 > best_tail) best_tail = d2;
        }
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, vbest);
    const double best =
        std::max(best_tail, std::max(std::max(lane[0], lane[1]), std::max(lane[2], lane[3])));
    return std::sqrt(best);
}

const KernelSet& avx2_set() {
    static const KernelSet set{"avx2", &strip_forces_avx2, &excursion_avx2, &diameter_avx2};
    return set;
}

}  // namespace flapsim::kernels

#endif  // x86_64
