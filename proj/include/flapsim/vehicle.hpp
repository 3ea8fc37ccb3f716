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

#ifndef FLAPSIM_VEHICLE_HPP
#define FLAPSIM_VEHICLE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "flapsim/aero.hpp"
#include "flapsim/blade_elements.hpp"
#include "flapsim/mat3.hpp"
#include "flapsim/rotation.hpp"
#include "flapsim/vec3.hpp"
#include "flapsim/wake.hpp"

namespace flapsim::vehicle {

// Body frame: X ventral, Y left, Z cephalad. Wings stroke about the body Z
// axis; passive pitch rotates each wing about its leading-edge spar, positive
// pitch swinging the trailing edge dorsally.

enum class PanelKind { Wing, TailFixed, TailRudder };

struct PanelConfig {
    std::string name;
    PanelKind kind = PanelKind::Wing;
    Vec3 root;           // hinge root, body frame, m
    Vec3 stroke_axis{0.0, 0.0, 1.0};  // unit; wings sweep about this axis
    Vec3 spar_mid;       // unit spar direction at mid-stroke
    Vec3 chord_zero;     // unit chord direction at zero pitch, perpendicular to spar_mid
    double hinge_sign = 1.0;   // hinge axis = hinge_sign * spar
    double stroke_sign = 0.0;  // panel stroke = stroke_sign * global stroke angle
    double inertia = 0.0;       // I_w about the hinge, kg m^2 (wings)
    double damping = 0.0;       // linear pitch damping, N m s/rad (wings)
    double damping_quad = 0.0;  // quadratic pitch damping, N m s^2/rad^2
    std::vector<geom::BladeElement> elements;
};

struct RobotConfig {
    double mass = 0.022;  // kg
    Mat3 inertia = Mat3::diag(1.2e-4, 1.2e-4, 4.0e-5);
    double gravity = 9.81;
    double air_density = 1.29;
    double reynolds = 7000.0;
    double spring_k = 0.025;          // N m / rad
    double pitch_stop = M_PI / 4.0;   // stopper angle, rad
    double eq_pitch_range = M_PI / 4.0;
    double rudder_range = M_PI / 4.0;
    double stroke_amplitude = M_PI / 4.0;  // peak to peak, rad
    double disk_area = 0.0;                // S_d; 0 selects the default arc x span
    double wing_tail_distance = 0.15;      // d_wt, m
    double f_hover = 12.5;                 // Hz
    double f_min = 9.0;
    double f_max = 15.0;
    // command = torque_to_command[axis] * desired torque, clamped to the
    // allocation ranges (x: roll->rudder, y: pitch, z: yaw)
    Vec3 torque_to_command{60.0, 60.0, 60.0};
    std::vector<PanelConfig> panels;

    double wing_span = 0.14;  // single panel spanwise length

    // Default S_d: stroke-arc length at the tip times the span.
    double effective_disk_area() const {
        return disk_area > 0.0 ? disk_area : stroke_amplitude * wing_span * wing_span;
    }

    static RobotConfig from_json_file(const std::string& path);
    static RobotConfig from_json_text(const std::string& text, const std::string& base_dir);
};

struct BodyState {
    spatial::Rotation rotation;  // body -> inertia
    Vec3 omega;                  // body frame, rad/s
    Vec3 position;               // inertia frame, m
    Vec3 velocity;               // inertia frame, m/s
};

struct WingHingeState {
    double stroke = 0.0;       // rad
    double stroke_rate = 0.0;  // rad/s
    double pitch = 0.0;        // rad
    double pitch_rate = 0.0;   // rad/s
    double eq_pitch = 0.0;     // commanded equilibrium, rad
};

struct ActuationCommand {
    double frequency = 0.0;  // Hz
    double pitch = 0.0;      // rad
    double yaw = 0.0;        // rad
    double roll = 0.0;       // rad
};

struct StrokeSample {
    double angle = 0.0;
    double rate = 0.0;
    double accel = 0.0;
};

// phi = (amplitude_pp/2) sin(2 pi f t), with analytic derivatives.
StrokeSample stroke_angle(double t, double frequency, double amplitude_pp);

struct Allocation {
    double eq_left = 0.0;   // left wings equilibrium pitch (positive dorsal)
    double eq_right = 0.0;
    double rudder = 0.0;    // positive right
    bool clamped = false;
};

// Table-style allocation: pitch moves both sides together, yaw moves them in
// opposition, roll maps 1:1 to the rudder. Superpositions clamp into range.
Allocation allocate(const ActuationCommand& cmd, const RobotConfig& cfg);

// One semi-implicit Euler step of
//   I_w pitch'' = M - k (pitch - eq) - c pitch' - c2 |pitch'| pitch',
// clamped at the stoppers with the rate zeroed on contact. The quadratic
// term models the rotational drag of the plate about its hinge.
WingHingeState passive_pitch_step(const WingHingeState& h, double aero_moment, double spring_k,
                                  double stop_angle, double inertia, double damping, double dt,
                                  double damping_quad = 0.0);

struct PanelWrench {
    Vec3 force;   // body frame, N
    Vec3 torque;  // body frame about the CoM, N m
};

struct StepTelemetry {
    Vec3 aero_force_world;
    Vec3 aero_torque_body;
    std::vector<PanelWrench> panel_wrench;    // per panel, body frame
    Vec3 wing_lift_sum_world;                 // resultant translational lift of the wings
    Vec3 induced_velocity_world;              // actuator-disk value (along the lift)
    Vec3 tail_inflow_world;                   // delayed wake velocity applied at the tail
    double thrust_body = 0.0;                 // body-Z aero force component
    // per-wing detail (index matches wing panels order)
    std::vector<double> wing_stroke;
    std::vector<double> wing_pitch;
    std::vector<Vec3> wing_lift_body;
    std::vector<Vec3> wing_drag_body;
    std::vector<Vec3> wing_rot_body;
    std::vector<Vec3> wing_added_body;
};

struct DivergenceError : std::runtime_error {
    explicit DivergenceError(std::size_t step_index)
        : std::runtime_error("simulation diverged (non-finite state) at step " +
                             std::to_string(step_index)),
          step(step_index) {}
    std::size_t step;
};

class FlappingRobot {
  public:
    explicit FlappingRobot(RobotConfig cfg);

    void set_fixed_base(bool fixed) { fixed_base_ = fixed; }
    void set_gravity_enabled(bool on) { gravity_on_ = on; }
    void set_aero_enabled(bool on) { aero_on_ = on; }
    void set_wind(const Vec3& freestream_world) { wind_ = freestream_world; }
    // delta F in the inertia frame, delta tau in the body frame
    void set_disturbance(const Vec3& force_world, const Vec3& torque_body) {
        dist_force_ = force_world;
        dist_torque_ = torque_body;
    }

    void command(const ActuationCommand& cmd);

    // Open-loop frequency override for the measurement campaigns; the
    // closed-loop [f_min, f_max] restriction applies only through command().
    void set_frequency(double f) { frequency_ = f; }

    // Advances one simulation step (1 ms nominal). Throws DivergenceError on
    // non-finite state.
    void step(double dt);

    double time() const { return time_; }
    std::size_t step_count() const { return step_count_; }
    const BodyState& state() const { return state_; }
    BodyState& mutable_state() { return state_; }
    const RobotConfig& config() const { return cfg_; }
    const StepTelemetry& telemetry() const { return telem_; }
    const wake::WakeBuffer& wake_buffer() const { return wake_; }
    const std::vector<WingHingeState>& wing_states() const { return wing_states_; }
    double rudder_angle() const { return rudder_; }
    double frequency() const { return frequency_; }
    const std::vector<std::size_t>& wing_panel_indices() const { return wing_panels_; }

  private:
    void evaluate_panels(double dt);

    RobotConfig cfg_;
    BodyState state_;
    std::vector<WingHingeState> wing_states_;  // one per wing panel
    std::vector<std::size_t> wing_panels_;     // indices into cfg_.panels
    double rudder_ = 0.0;
    double frequency_ = 0.0;
    double stroke_phase_ = 0.0;
    double time_ = 0.0;
    std::size_t step_count_ = 0;
    bool fixed_base_ = false;
    bool gravity_on_ = true;
    bool aero_on_ = true;
    Vec3 wind_;
    Vec3 dist_force_;
    Vec3 dist_torque_;
    wake::WakeBuffer wake_;
    StepTelemetry telem_;
    aero::ReynoldsCoefficients re_coef_;
    double c_rot_ = 0.0;

    // per-strip scratch, SoA across the largest panel
    struct Scratch {
        std::vector<double> ux, uy, uz, dux, duy, duz, cx, cy, cz, ax, ay, az, chord, dr;
        std::vector<double> lift_x, lift_y, lift_z, drag_x, drag_y, drag_z;
        std::vector<double> rot_x, rot_y, rot_z, add_x, add_y, add_z, alpha, cop_t;
        void resize(std::size_t n);
    } scratch_;
    std::vector<std::vector<Vec3>> u_prev_;  // previous effective velocity per panel/strip
    std::vector<double> hinge_moment_;       // per wing panel, this step
};

}  // namespace flapsim::vehicle

#endif  // FLAPSIM_VEHICLE_HPP
