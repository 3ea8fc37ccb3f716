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

#include "flapsim/control.hpp"

#include <cmath>
#include <stdexcept>

namespace flapsim::control {

using spatial::attitude_error;
using spatial::hat;
using spatial::Rotation;
using spatial::velocity_error;

void Lowpass2::configure(double natural_freq_rad, double zeta, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("Lowpass2: dt must be > 0");
    const double k = 2.0 / dt;
    const double wn2 = natural_freq_rad * natural_freq_rad;
    const double den = k * k + 2.0 * zeta * natural_freq_rad * k + wn2;
    b0_ = wn2 / den;
    b1_ = 2.0 * b0_;
    b2_ = b0_;
    a1_ = 2.0 * (wn2 - k * k) / den;
    a2_ = (k * k - 2.0 * zeta * natural_freq_rad * k + wn2) / den;
    reset();
}

void Lowpass2::reset(const Vec3& value) {
    // transposed direct form II steady state for a constant input
    for (int i = 0; i < 3; ++i) {
        s1_[i] = (1.0 - b0_) * value[i];
        s2_[i] = (b2_ - a2_) * value[i];
    }
}

Vec3 Lowpass2::step(const Vec3& in) {
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
        const double y = b0_ * in[i] + s1_[i];
        s1_[i] = b1_ * in[i] - a1_ * y + s2_[i];
        s2_[i] = b2_ * in[i] - a2_ * y;
        out[i] = y;
    }
    return out;
}

RobustTerms robust_terms(const Vec3& e_a, const GainSet& g) {
    RobustTerms out;
    const double n = e_a.norm();
    out.v1 = e_a * (-g.delta_b * g.delta_b / (g.delta_b * n + g.epsilon));
    out.v2 = sgn(e_a) * (-g.k_v * std::pow(n, g.rho_v)) + out.v1;
    return out;
}

Vec3 desired_angular_accel(const Rotation& r, const Rotation& r_d, const Vec3& omega,
                           const Vec3& omega_d, const Vec3& omega_d_dot) {
    const Mat3 rel = r.matrix().transpose() * r_d.matrix();
    return -(hat(omega) * (rel * omega_d)) + rel * omega_d_dot;
}

Mat3 adaptive_inertia_update(const Mat3& j_bar, const Vec3& omega, const Vec3& alpha_d,
                             const Vec3& e_a, const GainSet& g, double dt) {
    const Mat3 ww = outer(omega, omega);
    const Mat3 he = hat(e_a);
    const Mat3 rate = (outer(alpha_d, e_a) * -1.0 - outer(e_a, alpha_d) + ww * he - he * ww -
                       j_bar * (2.0 * g.sigma_j)) *
                      (0.5 * g.k_j);
    return j_bar + rate * dt;
}

Vec3 attitude_torque(AttitudeLaw law, const Rotation& r, const Rotation& r_d, const Vec3& omega,
                     const Vec3& omega_d, const Vec3& omega_d_dot, const GainSet& g,
                     AttitudeControlState& state, double dt, AttitudeDebug* debug) {
    const Mat3 gw = Mat3::diag(g.attitude_weight);
    const auto [psi, e_r] = attitude_error(r, r_d, gw);
    const Vec3 e_w = velocity_error(omega, r, r_d, omega_d);
    if (debug) {
        debug->psi = psi;
        debug->e_r = e_r;
        debug->e_omega = e_w;
    }
    const Vec3 base = e_r * -g.k_r - e_w * g.k_omega;
    if (law == AttitudeLaw::Tau1) return base;

    const Vec3 e_a = e_w + e_r * g.error_mix;
    const RobustTerms v = robust_terms(e_a, g);
    if (law == AttitudeLaw::Tau3) return base + v.v2;

    // Tau2: robust adaptive with feedforward through the inertia estimate
    const Vec3 alpha_d = desired_angular_accel(r, r_d, omega, omega_d, omega_d_dot);
    state.j_bar = adaptive_inertia_update(state.j_bar, omega, alpha_d, e_a, g, dt);
    return base + v.v1 + omega.cross(state.j_bar * omega) + state.j_bar * alpha_d;
}

EsoState eso_step(const EsoState& s, const Vec3& p_meas, const Vec3& u_t_accel, const GainSet& g,
                  double mass, double gravity, double dt) {
    const Vec3 p_err = s.p_o - p_meas;
    const Vec3 corr_pv = sig_pow(p_err, 0.5 * (g.rho_e + 1.0));
    const Vec3 corr_z = sig_pow(p_err, g.rho_e);
    EsoState out;
    out.p_o = s.p_o + (s.v_o - Vec3{g.g_p.x * corr_pv.x, g.g_p.y * corr_pv.y,
                                    g.g_p.z * corr_pv.z}) *
                          dt;
    const Vec3 gv{g.g_v.x * corr_pv.x, g.g_v.y * corr_pv.y, g.g_v.z * corr_pv.z};
    out.v_o = s.v_o +
              (u_t_accel - Vec3{0.0, 0.0, gravity} + (s.z - gv) * (1.0 / mass)) * dt;
    out.z = s.z - Vec3{g.g_z.x * corr_z.x, g.g_z.y * corr_z.y, g.g_z.z * corr_z.z} * dt;
    return out;
}

static Vec3 cmul(const Vec3& gain, const Vec3& v) {
    return {gain.x * v.x, gain.y * v.y, gain.z * v.z};
}

// componentwise clamp with the update zeroed at an active bound
static Vec3 project_integral(const Vec3& e_i, const Vec3& rate, double bound, double dt) {
    Vec3 out = e_i;
    for (int i = 0; i < 3; ++i) {
        double v = out[i] + rate[i] * dt;
        if (v > bound) v = bound;
        if (v < -bound) v = -bound;
        out[i] = v;
    }
    return out;
}

Vec3 position_control(PositionLaw law, const Vec3& e_p, const Vec3& e_v, const Vec3& z_force,
                      const Vec3& vdot_d, const Rotation& r, const GainSet& g, double mass,
                      double gravity, double dt, PositionControlState& state) {
    const Vec3 ge3{0.0, 0.0, gravity};
    switch (law) {
        case PositionLaw::Ut1: {
            const Vec3 sat = tanh3(cmul(g.k_p, e_p));
            const Vec3 s = sat * g.c_s + cmul(g.k_vel, e_v);
            const Vec3 rate = r.matrix().transpose() * (cmul(g.k_ip, e_p) + cmul(g.k_iv, e_v));
            state.e_i = project_integral(state.e_i, rate, g.e_ib, dt);
            return cmul(g.k_s, sig_pow(s, g.rho_s)) + cmul(g.k_ep, sat) + cmul(g.k_ev, e_v) +
                   cmul(g.k_ei, r.matrix() * state.e_i) + vdot_d - z_force * (1.0 / mass) + ge3;
        }
        case PositionLaw::Ut2:
            return cmul(g.k_ep2, tanh3(cmul(g.k_p2, e_p))) + cmul(g.k_ev2, e_v);
        case PositionLaw::Ut3: {
            const Vec3 s3 = e_p + cmul(g.k_v3, e_v);
            return cmul(g.k_s3, sgn(s3)) + cmul(g.k_ep3, e_p) + cmul(g.k_ev3, e_v) + vdot_d + ge3;
        }
    }
    return {};
}

static Mat3 rodrigues_aligning(const Vec3& from, const Vec3& to_unit, double eps_k) {
    // rotation taking `from` to `to_unit`; both unit
    const Vec3 k = from.cross(to_unit);
    const double c = from.dot(to_unit);
    const double s2 = k.norm_sq();
    const Mat3 kh = hat(k);
    return Mat3::identity() + kh + (kh * kh) * ((1.0 - c) / (s2 + eps_k));
}

Rotation thrust_to_attitude(const Vec3& u_t, const Vec3& d_t, const Vec3& v_d, double eps_k) {
    const double un = u_t.norm();
    if (!(un > 0.0)) throw std::invalid_argument("thrust_to_attitude: zero thrust direction");
    const Vec3 e3{0.0, 0.0, 1.0};
    const Mat3 r_tilt = rodrigues_aligning(e3, u_t / un, eps_k);

    Mat3 r_z = Mat3::identity();
    const Vec3 v_xy{v_d.x, v_d.y, 0.0};
    const double vn = v_xy.norm();
    if (vn > 1e-6) {
        const Vec3 v_hat = v_xy / vn;
        const double c_z = d_t.dot(v_hat);
        if (c_z < -1.0 + 1e-9) {
            r_z = Mat3::diag(-1.0, -1.0, 1.0);  // heading reversal
        } else {
            const Vec3 k_z = d_t.cross(v_hat);
            const Mat3 kh = hat(k_z);
            r_z = Mat3::identity() + kh + (kh * kh) * ((1.0 - c_z) / k_z.norm_sq());
        }
    }
    return Rotation(r_tilt * r_z).renormalized();
}

Vec3 reference_tracker_step(TrackerState& s, const Rotation& r_d, const GainSet& g, double dt) {
    // e_Rf is the attitude error of the filtered frame relative to the command
    const Vec3 e_rf =
        attitude_error(s.r_f, r_d, Mat3::diag(g.tracker_weight)).e_r;
    const Vec3 omega_f_dot = -cmul(g.k_omega_f, s.omega_f) - e_rf * g.k_rf;
    s.omega_f += omega_f_dot * dt;
    s.r_f = spatial::integrate_rotation(s.r_f, s.omega_f, dt).renormalized();
    return omega_f_dot;
}

double thrust_to_frequency(const Vec3& u_t, double f_hover, double gravity, double f_min,
                           double f_max) {
    if (!(f_hover > 0.0)) throw std::invalid_argument("thrust_to_frequency: f_hover must be > 0");
    return clamp(f_hover / gravity * u_t.norm(), f_min, f_max);
}

}  // namespace flapsim::control
