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

#ifndef FLAPSIM_ROTATION_HPP
#define FLAPSIM_ROTATION_HPP

#include "flapsim/mat3.hpp"
#include "flapsim/vec3.hpp"

namespace flapsim::spatial {

// Hat map R^3 -> so(3), hat(v) w = v x w.
Mat3 hat(const Vec3& v);

// Inverse of hat. Throws std::invalid_argument if S deviates from
// antisymmetry by more than tol.
Vec3 vee(const Mat3& S, double tol = 1e-12);

// Rodrigues closed form of exp(hat(phi)).
Mat3 exp_so3(const Vec3& phi);

// Attitude as a rotation matrix (body -> inertia).
class Rotation {
  public:
    Rotation() : r_(Mat3::identity()) {}
    explicit Rotation(const Mat3& m) : r_(m) {}

    static Rotation identity() { return Rotation(); }
    static Rotation axis_angle(const Vec3& axis, double angle);
    // ZYX convention: yaw about Z, then pitch about Y, then roll about X.
    static Rotation from_euler_zyx(double roll, double pitch, double yaw);

    const Mat3& matrix() const { return r_; }
    Rotation transpose() const { return Rotation(r_.transpose()); }
    Vec3 operator*(const Vec3& v) const { return r_ * v; }
    Rotation operator*(const Rotation& o) const { return Rotation(r_ * o.r_); }

    // Euler angles for CSV reporting only.
    Vec3 euler_zyx() const;

    // Gram-Schmidt re-orthonormalization; keeps det +1.
    Rotation renormalized() const;

    // max(|R R^T - I|, |det R - 1|)
    double orthonormality_error() const;

    bool is_finite() const { return r_.is_finite(); }

  private:
    Mat3 r_;
};

// One step of Rdot = R hat(omega): R <- R * exp(dt * hat(omega)).
// Exactly on-manifold up to roundoff; callers renormalize periodically.
Rotation integrate_rotation(const Rotation& r, const Vec3& omega, double dt);

struct AttitudeError {
    double psi = 0.0;  // 1/2 tr[G (I - Rd^T R)]
    Vec3 e_r;          // 1/2 (G Rd^T R - R^T Rd G)^vee
};

// G must be positive definite diagonal.
AttitudeError attitude_error(const Rotation& r, const Rotation& r_d, const Mat3& g);

// e_Omega = Omega - R^T Rd Omega_d
Vec3 velocity_error(const Vec3& omega, const Rotation& r, const Rotation& r_d,
                    const Vec3& omega_d);

}  // namespace flapsim::spatial

#endif  // FLAPSIM_ROTATION_HPP
