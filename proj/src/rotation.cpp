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

#include "flapsim/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace flapsim::spatial {

Mat3 hat(const Vec3& v) {
    return {0.0, -v.z, v.y,
            v.z, 0.0, -v.x,
            -v.y, v.x, 0.0};
}

Vec3 vee(const Mat3& S, double tol) {
    const double sym = std::max({std::fabs(S(0, 0)), std::fabs(S(1, 1)), std::fabs(S(2, 2)),
                                 std::fabs(S(0, 1) + S(1, 0)),
                                 std::fabs(S(0, 2) + S(2, 0)),
                                 std::fabs(S(1, 2) + S(2, 1))});
    if (sym > tol) {
        throw std::invalid_argument("vee: matrix is not antisymmetric within tolerance");
    }
    return {S(2, 1), S(0, 2), S(1, 0)};
}

// Antisymmetric part only; used where the argument is antisymmetric by
// construction up to roundoff (attitude errors).
static Vec3 vee_unchecked(const Mat3& S) {
    return {0.5 * (S(2, 1) - S(1, 2)), 0.5 * (S(0, 2) - S(2, 0)), 0.5 * (S(1, 0) - S(0, 1))};
}

Mat3 exp_so3(const Vec3& phi) {
    const double angle = phi.norm();
    if (angle < 1e-12) {
        // I + hat(phi) + hat(phi)^2/2, adequate below the cutoff
        const Mat3 k = hat(phi);
        return Mat3::identity() + k + (k * k) * 0.5;
    }
    const Vec3 axis = phi / angle;
    const Mat3 k = hat(axis);
    return Mat3::identity() + k * std::sin(angle) + (k * k) * (1.0 - std::cos(angle));
}

Rotation Rotation::axis_angle(const Vec3& axis, double angle) {
    return Rotation(exp_so3(axis.normalized() * angle));
}

Rotation Rotation::from_euler_zyx(double roll, double pitch, double yaw) {
    const Rotation rz = axis_angle({0, 0, 1}, yaw);
    const Rotation ry = axis_angle({0, 1, 0}, pitch);
    const Rotation rx = axis_angle({1, 0, 0}, roll);
    return rz * ry * rx;
}

Vec3 Rotation::euler_zyx() const {
    const Mat3& m = r_;
    const double pitch = std::asin(clamp(-m(2, 0), -1.0, 1.0));
    double roll, yaw;
    if (std::fabs(m(2, 0)) < 1.0 - 1e-9) {
        roll = std::atan2(m(2, 1), m(2, 2));
        yaw = std::atan2(m(1, 0), m(0, 0));
    } else {
        // gimbal lock: fold yaw into roll
        roll = std::atan2(-m(1, 2), m(1, 1));
        yaw = 0.0;
    }
    return {roll, pitch, yaw};
}

Rotation Rotation::renormalized() const {
    Vec3 c0 = r_.col(0).normalized();
    Vec3 c2 = c0.cross(r_.col(1)).normalized();
    Vec3 c1 = c2.cross(c0);
    return Rotation(Mat3{c0.x, c1.x, c2.x,
                         c0.y, c1.y, c2.y,
                         c0.z, c1.z, c2.z});
}

double Rotation::orthonormality_error() const {
    const Mat3 e = r_ * r_.transpose() - Mat3::identity();
    double err = 0.0;
    for (double v : e.m) err = std::max(err, std::fabs(v));
    return std::max(err, std::fabs(r_.det() - 1.0));
}

Rotation integrate_rotation(const Rotation& r, const Vec3& omega, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate_rotation: dt must be > 0");
    return Rotation(r.matrix() * exp_so3(omega * dt));
}

AttitudeError attitude_error(const Rotation& r, const Rotation& r_d, const Mat3& g) {
    if (!(g(0, 0) > 0.0 && g(1, 1) > 0.0 && g(2, 2) > 0.0)) {
        throw std::invalid_argument("attitude_error: G must be positive definite diagonal");
    }
    const Mat3 rel = r_d.matrix().transpose() * r.matrix();
    AttitudeError out;
    out.psi = 0.5 * (g * (Mat3::identity() - rel)).trace();
    const Mat3 a = g * rel - rel.transpose() * g;
    out.e_r = vee_unchecked(a) * 0.5;
    return out;
}

Vec3 velocity_error(const Vec3& omega, const Rotation& r, const Rotation& r_d,
                    const Vec3& omega_d) {
    return omega - (r.matrix().transpose() * r_d.matrix()) * omega_d;
}

}  // namespace flapsim::spatial
