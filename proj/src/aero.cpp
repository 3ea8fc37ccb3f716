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

#include "flapsim/aero.hpp"

#include <cmath>
#include <stdexcept>

namespace flapsim::aero {

ReynoldsCoefficients reynolds_coefficients(double re) {
    if (!(re > 0.0)) throw std::invalid_argument("reynolds_coefficients: Re must be > 0");
    ReynoldsCoefficients c;
    c.a_lift = 1.966 - 3.94 * std::pow(re, -0.429);
    c.a_drag = 1.873 - 3.14 * std::pow(re, -0.369);
    c.c_d0 = 0.031 + 10.48 * std::pow(re, -0.764);
    return c;
}

LiftDragCoefficients aero_coefficients(double alpha, double re) {
    const ReynoldsCoefficients rc = reynolds_coefficients(re);
    LiftDragCoefficients out;
    out.c_lt = rc.a_lift * std::sin(2.0 * alpha);
    out.c_dt = rc.c_d0 + rc.a_drag * (1.0 - std::cos(2.0 * alpha));
    return out;
}

double rotational_coefficient(double x0_hat) {
    if (!(x0_hat >= 0.0 && x0_hat <= 1.0)) {
        throw std::invalid_argument("rotational_coefficient: x0_hat must be in [0, 1]");
    }
    return M_PI * (0.75 - x0_hat);
}

Vec3 effective_velocity(const Vec3& freestream, const Vec3& v_wing, const Vec3& v_body_t,
                        const Vec3& v_body_r, const Vec3& plane_normal) {
    const Vec3 raw = freestream - v_wing - v_body_t - v_body_r;
    return raw - plane_normal * plane_normal.dot(raw);
}

AngleOfAttack angle_of_attack(const Vec3& u_w, const Vec3& chord_dir) {
    AngleOfAttack out;
    const double un = u_w.norm();
    if (un <= kVelocityFloor) {
        out.zero_flow = true;
        return out;
    }
    out.alpha = std::acos(clamp(u_w.dot(chord_dir) / un, -1.0, 1.0));
    return out;
}

StripForces strip_forces(const StripKinematics& k, const geom::BladeElement& elem,
                         const AeroEnvironment& env) {
    StripForces out;
    const double c = elem.chord;
    const double dr = elem.dr;
    const double un = k.u_w.norm();
    const bool still = k.zero_flow || un <= kVelocityFloor;
    const double alpha = still ? 0.0 : k.alpha;
    out.cop_translational = std::fabs(alpha) / M_PI;

    const double sin_a = std::sin(alpha);
    const double cos_a = std::cos(alpha);

    if (!still) {
        const Vec3 u_hat = k.u_w / un;
        const ReynoldsCoefficients rc = reynolds_coefficients(env.reynolds);
        const double c_lt = rc.a_lift * 2.0 * sin_a * cos_a;
        const double c_dt = rc.c_d0 + rc.a_drag * (1.0 - (2.0 * cos_a * cos_a - 1.0));
        const double q = 0.5 * env.rho * c * un * un * dr;

        // Lift is perpendicular to the flow inside the strip plane, on the
        // side the leading edge faces.
        Vec3 lift_dir = u_hat.cross(k.plane_normal).normalized(1e-12);
        const double side = -k.chord_dir.dot(lift_dir);
        lift_dir = lift_dir * sign(side);
        out.lift = lift_dir * (q * c_lt);
        out.drag = u_hat * (q * c_dt);

        // Kutta-Joukowski rotational circulation: the hinge rotation sense
        // (alpha_rate about plane_normal) crossed with the flow.
        const double c_r = rotational_coefficient(0.0);  // pitch axis at the leading edge
        out.rotational =
            k.plane_normal.cross(k.u_w) * (env.rho * c * c * c_r * dr * k.alpha_rate);

        const Vec3 m_hat = k.chord_dir.cross(k.plane_normal).normalized(1e-12);
        const double mag_a = (env.rho * M_PI * c * c / 4.0) *
                             (k.u_w.dot(k.u_dot) / un * sin_a + k.u_dot.norm() * alpha * cos_a) *
                             dr;
        out.added_mass = m_hat * (mag_a * sign(k.u_w.dot(m_hat)));
    }
    return out;
}

double strip_moment(const StripForces& f, const geom::BladeElement& elem, const Vec3& chord_dir,
                    const Vec3& hinge_axis) {
    const double c = elem.chord;
    double m = 0.0;
    const auto arm_moment = [&](const Vec3& force, double cop_fraction) {
        const Vec3 arm = chord_dir * (elem.le_offset + cop_fraction * c);
        return arm.cross(force).dot(hinge_axis);
    };
    m += arm_moment(f.lift, f.cop_translational);
    m += arm_moment(f.drag, f.cop_translational);
    m += arm_moment(f.rotational, StripForces::kCopRotational);
    m += arm_moment(f.added_mass, StripForces::kCopAddedMass);
    return m;
}

Vec3 induced_velocity(const Vec3& lift_sum, double disk_area, double rho) {
    if (!(disk_area > 0.0)) throw std::invalid_argument("induced_velocity: disk area must be > 0");
    const double mag = lift_sum.norm();
    if (mag < kLiftFloor) return {0.0, 0.0, 0.0};
    return lift_sum / mag * (0.5 * std::sqrt(mag / (2.0 * rho * disk_area)));
}

}  // namespace flapsim::aero
