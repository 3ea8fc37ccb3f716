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

#ifndef FLAPSIM_SCENARIO_HPP
#define FLAPSIM_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flapsim/analysis.hpp"
#include "flapsim/control.hpp"
#include "flapsim/vehicle.hpp"

namespace flapsim::sim {

enum class TaskId {
    AttA,
    AttB1,
    AttB2,
    AttC,
    AttD,
    AttE,
    TrajVCir,
    TrajLCir,
    TrajLem,
    TrajP2P,
    Passive1,
    Passive2,
    Passive3,
    WakeSweep,
    WrenchTable,
};

TaskId task_from_string(const std::string& s);
std::string task_to_string(TaskId t);
bool is_attitude_task(TaskId t);
bool is_trajectory_task(TaskId t);

struct DisturbanceSchedule {
    Vec3 force_world;
    Vec3 torque_body;
    double t_on = 0.0;
    double t_off = 0.0;
};

struct FrequencySweep {
    double from = 5.0;
    double to = 19.0;
    double step = 1.0;
};

struct Scenario {
    std::string robot_config_path;
    TaskId task = TaskId::AttA;
    std::string controller;  // tau1|tau2|tau3 or ut1|ut2|ut3; default per task
    double duration = 20.0;
    Vec3 wind;
    std::uint64_t seed = 0;
    DisturbanceSchedule disturbance;
    FrequencySweep freq_sweep;
    control::GainSet gains;  // scenario overrides already applied

    static Scenario from_json_file(const std::string& path);
};

// Desired state at time t. Attitude tasks integrate Rd at the simulation
// rate; trajectory tasks give the printed p_d with derivatives.
struct Reference {
    spatial::Rotation r_d;
    Vec3 omega_d;
    Vec3 omega_d_dot;
    Vec3 p_d;
    Vec3 v_d;
    Vec3 a_d;
    Vec3 d_t{1.0, 0.0, 0.0};
};

class ReferenceProvider {
  public:
    ReferenceProvider(TaskId task, double dt);
    // advances internal Rd integration by one dt and returns the reference
    Reference step();
    double time() const { return t_; }

  private:
    Vec3 omega_d_at(double t) const;
    Vec3 omega_d_dot_at(double t) const;

    TaskId task_;
    double dt_;
    double t_ = 0.0;
    spatial::Rotation r_d_;
};

Vec3 trajectory_position(TaskId task, double t);
Vec3 trajectory_velocity(TaskId task, double t);
Vec3 trajectory_accel(TaskId task, double t);

// Closed-loop simulation: robot + scheduler (controller at 10 ms, observer
// and tracker at 1 ms).
class Simulation {
  public:
    Simulation(vehicle::RobotConfig cfg, TaskId task, const std::string& controller,
               const control::GainSet& gains);

    void set_wind(const Vec3& w);
    void set_disturbance(const DisturbanceSchedule& d) { disturbance_ = d; }

    void step();  // one 1 ms step
    void run(double duration_s);

    double time() const { return robot_.time(); }
    const vehicle::FlappingRobot& robot() const { return robot_; }
    vehicle::FlappingRobot& robot() { return robot_; }
    const Reference& reference() const { return ref_; }
    double psi() const { return psi_; }          // attitude error vs the task Rd
    Vec3 position_error() const;                  // p_d - p
    const control::EsoState& eso() const { return eso_; }
    const vehicle::ActuationCommand& command() const { return cmd_; }
    Vec3 last_torque_demand() const { return tau_; }

    static constexpr double kDt = 1e-3;              // simulation gap
    static constexpr int kControlDivider = 10;       // controller gap / simulation gap

  private:
    void control_update();

    vehicle::FlappingRobot robot_;
    TaskId task_;
    control::GainSet gains_;
    bool attitude_mode_;
    int law_index_;
    ReferenceProvider provider_;
    Reference ref_;
    DisturbanceSchedule disturbance_;

    control::Lowpass2 omega_filter_;
    control::AttitudeControlState att_state_;
    control::PositionControlState pos_state_;
    control::EsoState eso_;
    control::TrackerState tracker_;
    Vec3 tracker_omega_dot_;
    spatial::Rotation r_d_cmd_;
    Vec3 u_t_{0.0, 0.0, 9.81};
    Vec3 tau_;
    vehicle::ActuationCommand cmd_;
    double psi_ = 0.0;
    std::size_t step_index_ = 0;
};

// Lag of the pitch waveform behind the stroke over whole periods, as a
// fraction of the period (cross-correlation peak).
double pitch_stroke_lag_fraction(const std::vector<double>& stroke,
                                 const std::vector<double>& pitch, std::size_t period_samples);

// Fixed-base rig attitude for the passive-rotation cases: cephalad axis
// pitched past horizontal so a vertical wind lies mostly in the stroke plane.
spatial::Rotation passive_rig_attitude();

// Fixed-base wrench measurement for the actuation campaigns.
struct WrenchMeasurement {
    double frequency = 0.0;
    std::string label;
    Vec3 mean_force;        // body frame, N
    Vec3 mean_torque;       // body frame, N m
    Vec3 upsilon_force;     // oscillation statistic per axis
    Vec3 upsilon_torque;
    double mean_thrust = 0.0;  // body Z force
};
WrenchMeasurement measure_wrench(const vehicle::RobotConfig& cfg, double frequency,
                                 const vehicle::ActuationCommand& cmd, const Vec3& wind,
                                 int settle_periods = 20, int measure_periods = 10);

// Fixed-base wake delay at one frequency.
struct WakeDelayPoint {
    double frequency = 0.0;
    double t_delay = 0.0;      // s
    double phase_delay = 0.0;  // rad
    double mean_speed = 0.0;   // m/s
    double peak_speed = 0.0;   // m/s
};
WakeDelayPoint measure_wake_delay(const vehicle::RobotConfig& cfg, double frequency,
                                  double sim_time = 4.0);

struct RunResult {
    int exit_code = 0;
    std::string message;
    std::string telemetry_path;
    std::string summary_path;
};

// Executes a scenario and writes telemetry CSV + summary JSON (plus the
// wrench-table or wake-sweep JSON for those tasks) into out_dir.
RunResult run_scenario(const Scenario& sc, const std::string& out_dir);

}  // namespace flapsim::sim

#endif  // FLAPSIM_SCENARIO_HPP
