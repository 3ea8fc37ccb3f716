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

#ifndef FLAPSIM_AERO_HPP
#define FLAPSIM_AERO_HPP

#include "flapsim/blade_elements.hpp"
#include "flapsim/vec3.hpp"

namespace flapsim::aero {

// Velocity floor below which a strip is treated as still air.
inline constexpr double kVelocityFloor = 1e-6;  // m/s
// Lift floor below which no induced velocity is produced.
inline constexpr double kLiftFloor = 1e-9;  // N

struct AeroEnvironment {
    double rho = 1.29;        // air density, kg/m^3
    Vec3 freestream;          // U_inf in the inertia frame, m/s
    double reynolds = 7000.0;
};

// Reynolds power laws for the translational coefficient model.
struct ReynoldsCoefficients {
    double a_lift = 0.0;  // A_L
    double a_drag = 0.0;  // A_D
    double c_d0 = 0.0;    // C_D0
};
ReynoldsCoefficients reynolds_coefficients(double re);

struct LiftDragCoefficients {
    double c_lt = 0.0;  // A_L sin(2 alpha)
    double c_dt = 0.0;  // C_D0 + A_D (1 - cos(2 alpha))
};
LiftDragCoefficients aero_coefficients(double alpha, double re);

// C_r = pi (0.75 - x0_hat); x0_hat is the non-dimensional pitch-axis chord
// position in [0, 1]. Out-of-range input throws std::invalid_argument.
double rotational_coefficient(double x0_hat);

// u_w: relative flow (U_inf - v_W - v_Bt - v_Br) with its spanwise component
// removed. plane_normal must be unit length.
Vec3 effective_velocity(const Vec3& freestream, const Vec3& v_wing, const Vec3& v_body_t,
                        const Vec3& v_body_r, const Vec3& plane_normal);

struct AngleOfAttack {
    double alpha = 0.0;     // rad, [0, pi]
    bool zero_flow = false; // |u_w| below the velocity floor
};
AngleOfAttack angle_of_attack(const Vec3& u_w, const Vec3& chord_dir);

// Per-strip kinematic state. chord_dir and plane_normal are unit vectors;
// u_w lies in the strip plane (perpendicular to plane_normal). alpha and
// alpha_rate follow angle_of_attack and the hinge pitch rate about
// plane_normal (positive rate per the panel's pitch sign convention).
struct StripKinematics {
    Vec3 u_w;
    Vec3 u_dot;
    double alpha = 0.0;
    double alpha_rate = 0.0;
    Vec3 chord_dir;
    Vec3 plane_normal;
    bool zero_flow = false;
};

struct StripForces {
    Vec3 lift;        // translational lift, perpendicular to u_w in the strip plane
    Vec3 drag;        // translational drag, along the relative flow
    Vec3 rotational;  // rotational-circulation force
    Vec3 added_mass;  // reaction normal to the chord
    double cop_translational = 0.0;  // |alpha|/pi chord fraction

    static constexpr double kCopRotational = 0.5;
    static constexpr double kCopAddedMass = 9.0 / 16.0;

    Vec3 total() const { return lift + drag + rotational + added_mass; }
};

StripForces strip_forces(const StripKinematics& k, const geom::BladeElement& elem,
                         const AeroEnvironment& env);

// Pitch moment about the hinge axis through the leading edge. Each force
// component acts at its own center of pressure along the chord.
double strip_moment(const StripForces& f, const geom::BladeElement& elem, const Vec3& chord_dir,
                    const Vec3& hinge_axis);

// Actuator-disk induced velocity from the resultant translational lift.
// Returns the velocity along the lift direction; the caller applies the
// opposite sign when transporting the wake.
Vec3 induced_velocity(const Vec3& lift_sum, double disk_area, double rho);

}  // namespace flapsim::aero

#endif  // FLAPSIM_AERO_HPP
