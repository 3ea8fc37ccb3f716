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

#ifndef FLAPSIM_KERNELS_DETAIL_HPP
#define FLAPSIM_KERNELS_DETAIL_HPP

#include <cmath>

#include "flapsim/aero.hpp"
#include "flapsim/kernels.hpp"

namespace flapsim::kernels::detail {

// Reference per-strip evaluation shared by the scalar kernel and the tail
// loops of the SIMD kernels. Algebraic formulation: trig only through acos.
inline void strip_force_one(const StripBatchIn& in, const StripBatchOut& out, std::size_t i) {
    const double ux = in.ux[i], uy = in.uy[i], uz = in.uz[i];
    const double dux = in.dux[i], duy = in.duy[i], duz = in.duz[i];
    const double cx = in.cx[i], cy = in.cy[i], cz = in.cz[i];
    const double ax = in.axx[i], ay = in.axy[i], az = in.axz[i];
    const double chord = in.chord[i], dr = in.dr[i];

    const double un2 = ux * ux + uy * uy + uz * uz;
    const double un = std::sqrt(un2);
    if (un <= aero::kVelocityFloor) {
        out.lift_x[i] = out.lift_y[i] = out.lift_z[i] = 0.0;
        out.drag_x[i] = out.drag_y[i] = out.drag_z[i] = 0.0;
        out.rot_x[i] = out.rot_y[i] = out.rot_z[i] = 0.0;
        out.add_x[i] = out.add_y[i] = out.add_z[i] = 0.0;
        out.alpha[i] = 0.0;
        out.cop_t[i] = 0.0;
        return;
    }
    const double inv_un = 1.0 / un;
    const double hx = ux * inv_un, hy = uy * inv_un, hz = uz * inv_un;

    double cos_a = hx * cx + hy * cy + hz * cz;
    cos_a = cos_a > 1.0 ? 1.0 : (cos_a < -1.0 ? -1.0 : cos_a);
    const double sin2 = 1.0 - cos_a * cos_a;
    const double sin_a = std::sqrt(sin2 > 0.0 ? sin2 : 0.0);
    const double alpha = std::acos(cos_a);

    const double c_lt = in.a_lift * 2.0 * sin_a * cos_a;
    const double c_dt = in.c_d0 + in.a_drag * (2.0 - 2.0 * cos_a * cos_a);
    const double q = 0.5 * in.rho * chord * un2 * dr;

    // lift direction: unit(u_hat x axis), signed toward the leading edge side
    double lx = hy * az - hz * ay;
    double ly = hz * ax - hx * az;
    double lz = hx * ay - hy * ax;
    const double ln = std::sqrt(lx * lx + ly * ly + lz * lz);
    if (ln > 1e-12) {
        lx /= ln;
        ly /= ln;
        lz /= ln;
    } else {
        lx = ly = lz = 0.0;
    }
    const double side = -(cx * lx + cy * ly + cz * lz);
    const double sgn_l = side > 0.0 ? 1.0 : (side < 0.0 ? -1.0 : 0.0);
    const double fl = q * c_lt * sgn_l;
    out.lift_x[i] = fl * lx;
    out.lift_y[i] = fl * ly;
    out.lift_z[i] = fl * lz;

    const double fd = q * c_dt;
    out.drag_x[i] = fd * hx;
    out.drag_y[i] = fd * hy;
    out.drag_z[i] = fd * hz;

    // rotational circulation: hinge rotation sense crossed with the flow
    const double kr = in.rho * chord * chord * in.c_rot * dr * in.pitch_rate;
    out.rot_x[i] = kr * (ay * uz - az * uy);
    out.rot_y[i] = kr * (az * ux - ax * uz);
    out.rot_z[i] = kr * (ax * uy - ay * ux);

    // chord-normal direction for the added-mass reaction
    double mx = cy * az - cz * ay;
    double my = cz * ax - cx * az;
    double mz = cx * ay - cy * ax;
    const double mn = std::sqrt(mx * mx + my * my + mz * mz);
    if (mn > 1e-12) {
        mx /= mn;
        my /= mn;
        mz /= mn;
    } else {
        mx = my = mz = 0.0;
    }
    const double u_du = ux * dux + uy * duy + uz * duz;
    const double du_n = std::sqrt(dux * dux + duy * duy + duz * duz);
    const double mag_a =
        (in.rho * M_PI * chord * chord * 0.25) * (u_du * inv_un * sin_a + du_n * alpha * cos_a) * dr;
    const double press = ux * mx + uy * my + uz * mz;
    const double sgn_a = press > 0.0 ? 1.0 : (press < 0.0 ? -1.0 : 0.0);
    const double fa = mag_a * sgn_a;
    out.add_x[i] = fa * mx;
    out.add_y[i] = fa * my;
    out.add_z[i] = fa * mz;

    out.alpha[i] = alpha;
    out.cop_t[i] = alpha * (1.0 / M_PI);
}

}  // namespace flapsim::kernels::detail

#endif  // FLAPSIM_KERNELS_DETAIL_HPP
