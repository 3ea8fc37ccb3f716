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

#ifndef FLAPSIM_CONTROL_HPP
#define FLAPSIM_CONTROL_HPP

#include <array>

#include "flapsim/mat3.hpp"
#include "flapsim/rotation.hpp"
#include "flapsim/vec3.hpp"

namespace flapsim::control {

// Controller/observer/filter parameters. Defaults are the tuned values of
// the attitude- and trajectory-tracking campaigns.
struct GainSet {
    // attitude feedback
    Vec3 attitude_weight{1.0, 1.0, 1.0};  // diagonal of G
    double k_r = 2.0;
    double k_omega = 0.2;
    double error_mix = 1.0;  // c in e_A = e_Omega + c e_R
    // robust terms
    double delta_b = 0.2;
    double epsilon = 0.1;
    double k_v = 0.15;
    double rho_v = 0.5;
    // adaptive inertia
    double k_j = 0.1;
    double sigma_j = 20.0;

    // position controller u_t1
    Vec3 k_s{1.0, 1.0, 1.0};
    Vec3 k_p{0.8, 0.8, 0.8};
    Vec3 k_vel{0.5, 0.5, 0.5};
    Vec3 k_ep{10.0, 10.0, 10.0};
    Vec3 k_ev{0.5, 0.5, 0.5};
    Vec3 k_ei{0.01, 0.01, 0.01};
    Vec3 k_ip{0.8, 0.8, 0.8};
    Vec3 k_iv{0.5, 0.5, 0.5};
    double c_s = 2.0;
    double rho_s = 0.5;
    double e_ib = 1.0;  // integral projection bound

    // extended state observer
    Vec3 g_p{20.0, 20.0, 20.0};
    Vec3 g_v{10.0, 10.0, 10.0};
    Vec3 g_z{5.0, 5.0, 5.0};
    double rho_e = 0.5;

    // comparison controller u_t2
    Vec3 k_ep2{10.0, 10.0, 10.0};
    Vec3 k_p2{0.8, 0.8, 0.8};
    Vec3 k_ev2{1.0, 1.0, 1.0};

    // comparison controller u_t3
    Vec3 k_s3{0.5, 0.5, 0.5};
    Vec3 k_v3{0.5, 0.5, 0.5};
    Vec3 k_ep3{8.0, 8.0, 8.0};
    Vec3 k_ev3{0.5, 0.5, 0.5};

    // angular velocity filter
    double filter_wn = 2.0 * M_PI * 8.0;
    double filter_zeta = 0.8;

    // differential tracker for the desired attitude
    double k_rf = 400.0;
    Vec3 k_omega_f{40.0, 40.0, 40.0};
    Vec3 tracker_weight{1.0, 1.0, 1.0};  // diagonal of G_f

    // thrust mapping
    double f_hover = 12.5;  // Hz
    double eps_k = 1e-6;    // Rodrigues regularization
};

// Second-order low-pass (bilinear transform), unit DC gain, one biquad per
// channel.
class Lowpass2 {
  public:
    void configure(double natural_freq_rad, double zeta, double dt);
    Vec3 step(const Vec3& in);
    void reset(const Vec3& value = {});

  private:
    double b0_ = 1.0, b1_ = 0.0, b2_ = 0.0, a1_ = 0.0, a2_ = 0.0;
    std::array<double, 3> s1_{0, 0, 0};
    std::array<double, 3> s2_{0, 0, 0};
};

// v1 = -delta_b^2 e_A / (delta_b |e_A| + eps)
// v2 = -k_v sgn(e_A) |e_A|^rho_v + v1
struct RobustTerms {
    Vec3 v1;
    Vec3 v2;
};
RobustTerms robust_terms(const Vec3& e_a, const GainSet& g);

// alpha_d = -hat(Omega) R^T Rd Omega_d + R^T Rd Omega_d_dot
Vec3 desired_angular_accel(const spatial::Rotation& r, const spatial::Rotation& r_d,
                           const Vec3& omega, const Vec3& omega_d, const Vec3& omega_d_dot);

// dJ = kJ/2 (-alpha_d eA^T - eA alpha_d^T + Om Om^T hat(eA) - hat(eA) Om Om^T
//            - 2 sigma J) dt; symmetry preserved by construction.
Mat3 adaptive_inertia_update(const Mat3& j_bar, const Vec3& omega, const Vec3& alpha_d,
                             const Vec3& e_a, const GainSet& g, double dt);

enum class AttitudeLaw { Tau1 = 1, Tau2 = 2, Tau3 = 3 };

struct AttitudeControlState {
    Mat3 j_bar;  // adaptive inertia estimate, starts at zero
};

struct AttitudeDebug {
    double psi = 0.0;
    Vec3 e_r, e_omega;
};

Vec3 attitude_torque(AttitudeLaw law, const spatial::Rotation& r, const spatial::Rotation& r_d,
                     const Vec3& omega, const Vec3& omega_d, const Vec3& omega_d_dot,
                     const GainSet& g, AttitudeControlState& state, double dt,
                     AttitudeDebug* debug = nullptr);

// Extended state observer; z estimates m f_a + delta F (force units).
struct EsoState {
    Vec3 p_o;
    Vec3 v_o;
    Vec3 z;
};
EsoState eso_step(const EsoState& s, const Vec3& p_meas, const Vec3& u_t_accel, const GainSet& g,
                  double mass, double gravity, double dt);

enum class PositionLaw { Ut1 = 1, Ut2 = 2, Ut3 = 3 };

struct PositionControlState {
    Vec3 e_i;  // projected integral state (body frame)
};

// Virtual acceleration input u_t. e_p = p_d - p_o, e_v = v_d - v_o.
// Integral state advances only for Ut1.
Vec3 position_control(PositionLaw law, const Vec3& e_p, const Vec3& e_v, const Vec3& z_force,
                      const Vec3& vdot_d, const spatial::Rotation& r, const GainSet& g,
                      double mass, double gravity, double dt, PositionControlState& state);

// Desired attitude from the thrust direction (Rodrigues form) and the heading
// construction from d_T and the desired planar velocity.
spatial::Rotation thrust_to_attitude(const Vec3& u_t, const Vec3& d_t, const Vec3& v_d,
                                     double eps_k);

// Differential tracker producing a smooth (R_f, Omega_f) following R_d.
struct TrackerState {
    spatial::Rotation r_f;
    Vec3 omega_f;
};
// Returns Omega_f_dot used for the step (feeds the attitude feedforward).
Vec3 reference_tracker_step(TrackerState& s, const spatial::Rotation& r_d, const GainSet& g,
                            double dt);

// f = f_hover |u_t| / g, clamped into [f_min, f_max].
double thrust_to_frequency(const Vec3& u_t, double f_hover, double gravity, double f_min = 9.0,
                           double f_max = 15.0);

}  // namespace flapsim::control

#endif  // FLAPSIM_CONTROL_HPP
