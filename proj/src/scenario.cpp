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

#include "flapsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "flapsim/kernels.hpp"
#include "flapsim/telemetry.hpp"
#include "flapsim/wake.hpp"

namespace flapsim::sim {

using nlohmann::json;
using spatial::Rotation;

namespace {

const std::map<std::string, TaskId>& task_names() {
    static const std::map<std::string, TaskId> names{
        {"att-a", TaskId::AttA},         {"att-b1", TaskId::AttB1},
        {"att-b2", TaskId::AttB2},       {"att-c", TaskId::AttC},
        {"att-d", TaskId::AttD},         {"att-e", TaskId::AttE},
        {"traj-vcir", TaskId::TrajVCir}, {"traj-lcir", TaskId::TrajLCir},
        {"traj-lem", TaskId::TrajLem},   {"traj-p2p", TaskId::TrajP2P},
        {"passive-1", TaskId::Passive1}, {"passive-2", TaskId::Passive2},
        {"passive-3", TaskId::Passive3}, {"wake-sweep", TaskId::WakeSweep},
        {"wrench-table", TaskId::WrenchTable},
    };
    return names;
}

}  // namespace

TaskId task_from_string(const std::string& s) {
    const auto it = task_names().find(s);
    if (it == task_names().end()) throw std::invalid_argument("unknown task id: " + s);
    return it->second;
}

std::string task_to_string(TaskId t) {
    for (const auto& [name, id] : task_names())
        if (id == t) return name;
    return "?";
}

bool is_attitude_task(TaskId t) {
    return t == TaskId::AttA || t == TaskId::AttB1 || t == TaskId::AttB2 || t == TaskId::AttC ||
           t == TaskId::AttD || t == TaskId::AttE;
}

bool is_trajectory_task(TaskId t) {
    return t == TaskId::TrajVCir || t == TaskId::TrajLCir || t == TaskId::TrajLem ||
           t == TaskId::TrajP2P;
}

// ---------------------------------------------------------------------------
// references

Vec3 trajectory_position(TaskId task, double t) {
    switch (task) {
        case TaskId::TrajVCir:
        case TaskId::TrajLCir:
            return {2.0 - 2.0 * std::cos(0.2 * M_PI * t), 2.0 * std::sin(0.2 * M_PI * t), 0.0};
        case TaskId::TrajLem: {
            const double u = 0.2 * M_PI * t;
            const double den = 1.0 + std::sin(u) * std::sin(u);
            return {2.0 - 2.0 * std::cos(u) / den, 2.0 * std::sin(u) / den, 0.0};
        }
        case TaskId::TrajP2P:
            if (t <= 2.0 || t > 8.0) return {0.0, 0.0, 0.0};
            return {2.0, 2.0, 2.0};
        default:
            return {};
    }
}

Vec3 trajectory_velocity(TaskId task, double t) {
    switch (task) {
        case TaskId::TrajVCir:
        case TaskId::TrajLCir: {
            const double w = 0.2 * M_PI;
            return {2.0 * w * std::sin(w * t), 2.0 * w * std::cos(w * t), 0.0};
        }
        case TaskId::TrajLem: {
            const double h = 1e-4;
            return (trajectory_position(task, t + h) - trajectory_position(task, t - h)) /
                   (2.0 * h);
        }
        case TaskId::TrajP2P:
        default:
            return {};
    }
}

Vec3 trajectory_accel(TaskId task, double t) {
    switch (task) {
        case TaskId::TrajVCir:
        case TaskId::TrajLCir: {
            const double w = 0.2 * M_PI;
            return {2.0 * w * w * std::cos(w * t), -2.0 * w * w * std::sin(w * t), 0.0};
        }
        case TaskId::TrajLem: {
            const double h = 1e-4;
            return (trajectory_velocity(task, t + h) - trajectory_velocity(task, t - h)) /
                   (2.0 * h);
        }
        case TaskId::TrajP2P:
        default:
            return {};
    }
}

static Rotation att_e_target(double t) {
    // ZYX Euler targets (roll, pitch, yaw), one step every 2000 ms
    static const double seq[6][3] = {{M_PI / 2, 0, 0}, {-M_PI / 2, 0, 0}, {0, M_PI / 2, 0},
                                     {0, -M_PI / 2, 0}, {0, 0, -M_PI / 2}, {0, 0, M_PI / 2}};
    int k = static_cast<int>(t / 2.0);
    k = std::clamp(k, 0, 5);
    return Rotation::from_euler_zyx(seq[k][0], seq[k][1], seq[k][2]);
}

ReferenceProvider::ReferenceProvider(TaskId task, double dt) : task_(task), dt_(dt) {}

Vec3 ReferenceProvider::omega_d_at(double t) const {
    switch (task_) {
        case TaskId::AttA:
            return {0.5 * M_PI, 0.0, 0.0};
        case TaskId::AttB1:
            return {0.0, 0.5 * M_PI, 0.0};
        case TaskId::AttB2:
            return {0.0, -0.5 * M_PI, 0.0};
        case TaskId::AttC:
            return {0.0, 0.0, 0.5 * M_PI};
        case TaskId::AttD: {
            const double v = 0.5 * M_PI * std::cos(M_PI * t);
            return {v, v, v};
        }
        default:
            return {};
    }
}

Vec3 ReferenceProvider::omega_d_dot_at(double t) const {
    if (task_ == TaskId::AttD) {
        const double v = -0.5 * M_PI * M_PI * std::sin(M_PI * t);
        return {v, v, v};
    }
    return {};
}

Reference ReferenceProvider::step() {
    Reference ref;
    if (is_attitude_task(task_)) {
        if (task_ == TaskId::AttE) {
            t_ += dt_;
            r_d_ = att_e_target(t_);
            ref.r_d = r_d_;
        } else {
            // integrate Rd_dot = Rd hat(omega_d) at the simulation rate
            r_d_ = spatial::integrate_rotation(r_d_, omega_d_at(t_), dt_);
            t_ += dt_;
            if (static_cast<long long>(std::llround(t_ / dt_)) % 1000 == 0)
                r_d_ = r_d_.renormalized();
            ref.r_d = r_d_;
            ref.omega_d = omega_d_at(t_);
            ref.omega_d_dot = omega_d_dot_at(t_);
        }
    } else {
        t_ += dt_;
        ref.p_d = trajectory_position(task_, t_);
        ref.v_d = trajectory_velocity(task_, t_);
        ref.a_d = trajectory_accel(task_, t_);
        ref.d_t = task_ == TaskId::TrajLCir ? Vec3{0.0, 1.0, 0.0} : Vec3{1.0, 0.0, 0.0};
    }
    return ref;
}

// ---------------------------------------------------------------------------
// closed-loop simulation

Simulation::Simulation(vehicle::RobotConfig cfg, TaskId task, const std::string& controller,
                       const control::GainSet& gains)
    : robot_(std::move(cfg)),
      task_(task),
      gains_(gains),
      attitude_mode_(is_attitude_task(task)),
      provider_(task, kDt) {
    static_assert(kControlDivider == 10, "controller gap must be 10 simulation gaps");
    if (!is_attitude_task(task) && !is_trajectory_task(task))
        throw std::invalid_argument("Simulation: task is not a closed-loop task");
    const std::string def = attitude_mode_ ? "tau3" : "ut1";
    const std::string law = controller.empty() ? def : controller;
    if (attitude_mode_) {
        if (law == "tau1") law_index_ = 1;
        else if (law == "tau2") law_index_ = 2;
        else if (law == "tau3") law_index_ = 3;
        else throw std::invalid_argument("unknown attitude controller: " + law);
    } else {
        if (law == "ut1") law_index_ = 1;
        else if (law == "ut2") law_index_ = 2;
        else if (law == "ut3") law_index_ = 3;
        else throw std::invalid_argument("unknown position controller: " + law);
    }
    omega_filter_.configure(gains_.filter_wn, gains_.filter_zeta,
                            kDt * static_cast<double>(kControlDivider));
    eso_.p_o = robot_.state().position;
    u_t_ = Vec3{0.0, 0.0, robot_.config().gravity};
    cmd_.frequency = gains_.f_hover;
    // reference at t=0
    ref_ = Reference{};
    if (task == TaskId::AttE) ref_.r_d = att_e_target(0.0);
    if (is_trajectory_task(task)) {
        ref_.p_d = trajectory_position(task, 0.0);
        ref_.v_d = trajectory_velocity(task, 0.0);
        ref_.a_d = trajectory_accel(task, 0.0);
        ref_.d_t = task == TaskId::TrajLCir ? Vec3{0.0, 1.0, 0.0} : Vec3{1.0, 0.0, 0.0};
    }
    r_d_cmd_ = Rotation::identity();
}

void Simulation::set_wind(const Vec3& w) { robot_.set_wind(w); }

Vec3 Simulation::position_error() const { return ref_.p_d - robot_.state().position; }

void Simulation::control_update() {
    const vehicle::RobotConfig& cfg = robot_.config();
    const Vec3 omega_f = omega_filter_.step(robot_.state().omega);
    const double control_dt = kDt * static_cast<double>(kControlDivider);

    if (attitude_mode_) {
        tau_ = control::attitude_torque(static_cast<control::AttitudeLaw>(law_index_),
                                        robot_.state().rotation, ref_.r_d, omega_f, ref_.omega_d,
                                        ref_.omega_d_dot, gains_, att_state_, control_dt);
        cmd_.frequency = gains_.f_hover;
    } else {
        const Vec3 e_p = ref_.p_d - eso_.p_o;
        const Vec3 e_v = ref_.v_d - eso_.v_o;
        u_t_ = control::position_control(static_cast<control::PositionLaw>(law_index_), e_p, e_v,
                                         eso_.z, ref_.a_d, robot_.state().rotation, gains_,
                                         cfg.mass, cfg.gravity, control_dt, pos_state_);
        cmd_.frequency = control::thrust_to_frequency(u_t_, gains_.f_hover, cfg.gravity,
                                                      cfg.f_min, cfg.f_max);
        if (u_t_.norm() > 1e-9) {
            r_d_cmd_ = control::thrust_to_attitude(u_t_, ref_.d_t, ref_.v_d, gains_.eps_k);
        }
        tau_ = control::attitude_torque(control::AttitudeLaw::Tau3, robot_.state().rotation,
                                        tracker_.r_f, omega_f, tracker_.omega_f,
                                        tracker_omega_dot_, gains_, att_state_, control_dt);
    }
    cmd_.roll = clamp(cfg.torque_to_command.x * tau_.x, -cfg.rudder_range, cfg.rudder_range);
    cmd_.pitch = clamp(cfg.torque_to_command.y * tau_.y, -cfg.eq_pitch_range, cfg.eq_pitch_range);
    cmd_.yaw = clamp(cfg.torque_to_command.z * tau_.z, -cfg.eq_pitch_range, cfg.eq_pitch_range);
    robot_.command(cmd_);
}

void Simulation::step() {
    // 1 kHz: observer and tracker
    if (!attitude_mode_) {
        eso_ = control::eso_step(eso_, robot_.state().position, u_t_, gains_,
                                 robot_.config().mass, robot_.config().gravity, kDt);
        tracker_omega_dot_ = control::reference_tracker_step(tracker_, r_d_cmd_, gains_, kDt);
    }
    // 100 Hz: controller
    if (step_index_ % kControlDivider == 0) control_update();

    const double t = robot_.time();
    if (t >= disturbance_.t_on && t < disturbance_.t_off) {
        robot_.set_disturbance(disturbance_.force_world, disturbance_.torque_body);
    } else {
        robot_.set_disturbance({}, {});
    }

    robot_.step(kDt);
    ref_ = provider_.step();

    const Rotation target = attitude_mode_ ? ref_.r_d : tracker_.r_f;
    psi_ = spatial::attitude_error(robot_.state().rotation, target,
                                   Mat3::diag(gains_.attitude_weight))
               .psi;
    ++step_index_;
}

void Simulation::run(double duration_s) {
    const auto n = static_cast<std::size_t>(std::llround(duration_s / kDt));
    for (std::size_t i = 0; i < n; ++i) step();
}

// ---------------------------------------------------------------------------
// fixed-base measurement campaigns

WrenchMeasurement measure_wrench(const vehicle::RobotConfig& cfg, double frequency,
                                 const vehicle::ActuationCommand& cmd, const Vec3& wind,
                                 int settle_periods, int measure_periods) {
    vehicle::FlappingRobot robot(cfg);
    robot.set_fixed_base(true);
    robot.set_wind(wind);
    robot.set_frequency(frequency);
    vehicle::ActuationCommand c = cmd;
    c.frequency = 0.0;  // hold the sweep frequency
    robot.command(c);

    const double dt = 1e-3;
    const double period = 1.0 / frequency;
    const auto settle = static_cast<std::size_t>(std::llround(settle_periods * period / dt));
    const auto measure = static_cast<std::size_t>(std::llround(measure_periods * period / dt));

    for (std::size_t i = 0; i < settle; ++i) robot.step(dt);

    analysis::Vec3Series force{0.0, dt, {}}, torque{0.0, dt, {}};
    force.values.reserve(measure);
    torque.values.reserve(measure);
    for (std::size_t i = 0; i < measure; ++i) {
        robot.step(dt);
        Vec3 f_body, t_body;
        for (const vehicle::PanelWrench& w : robot.telemetry().panel_wrench) {
            f_body += w.force;
            t_body += w.torque;
        }
        force.values.push_back(f_body);
        torque.values.push_back(t_body);
    }

    WrenchMeasurement out;
    out.frequency = frequency;
    Vec3 mf, mt;
    for (const Vec3& v : force.values) mf += v;
    for (const Vec3& v : torque.values) mt += v;
    out.mean_force = mf / static_cast<double>(force.values.size());
    out.mean_torque = mt / static_cast<double>(torque.values.size());
    out.mean_thrust = out.mean_force.z;
    for (int axis = 0; axis < 3; ++axis) {
        out.upsilon_force[axis] = analysis::oscillation_statistic(force.component(axis));
        out.upsilon_torque[axis] = analysis::oscillation_statistic(torque.component(axis));
    }
    return out;
}

WakeDelayPoint measure_wake_delay(const vehicle::RobotConfig& cfg, double frequency,
                                  double sim_time) {
    vehicle::FlappingRobot robot(cfg);
    robot.set_fixed_base(true);
    robot.set_frequency(frequency);

    const double dt = 1e-3;
    const double period = 1.0 / frequency;
    const auto n = static_cast<std::size_t>(std::llround(sim_time / dt));
    const auto last_period = static_cast<std::size_t>(std::llround(period / dt));
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        robot.step(dt);
        if (n - i <= last_period)
            peak = std::max(peak, robot.telemetry().induced_velocity_world.norm());
    }
    WakeDelayPoint p;
    p.frequency = frequency;
    p.t_delay = robot.wake_buffer().travel_delay(period);
    p.phase_delay = wake::phase_delay(p.t_delay, period);
    p.mean_speed = cfg.wing_tail_distance / p.t_delay;
    p.peak_speed = peak;
    return p;
}

spatial::Rotation passive_rig_attitude() {
    return spatial::Rotation::axis_angle({0.0, 1.0, 0.0}, -112.0 * M_PI / 180.0);
}

double pitch_stroke_lag_fraction(const std::vector<double>& stroke,
                                 const std::vector<double>& pitch,
                                 std::size_t period_samples) {
    // lag of the pitch waveform behind the stroke, as a fraction of the period
    if (stroke.size() != pitch.size() || stroke.size() < 2 * period_samples)
        throw std::invalid_argument("pitch_stroke_lag_fraction: series too short");
    double best = -1e300;
    std::size_t best_lag = 0;
    for (std::size_t lag = 0; lag < period_samples; ++lag) {
        double acc = 0.0;
        for (std::size_t i = period_samples; i < stroke.size(); ++i) {
            acc += pitch[i] * stroke[i - lag];
        }
        if (acc > best) {
            best = acc;
            best_lag = lag;
        }
    }
    return static_cast<double>(best_lag) / static_cast<double>(period_samples);
}

// ---------------------------------------------------------------------------
// scenario parsing

static void apply_gain_overrides(control::GainSet& g, const json& j) {
    const auto scalar = [&](const char* key, double& field) {
        if (j.contains(key)) field = j.at(key);
    };
    const auto vec = [&](const char* key, Vec3& field) {
        if (!j.contains(key)) return;
        const json& v = j.at(key);
        if (v.is_number()) {
            const double s = v;
            field = {s, s, s};
        } else {
            field = {v.at(0), v.at(1), v.at(2)};
        }
    };
    scalar("k_r", g.k_r);
    scalar("k_omega", g.k_omega);
    scalar("error_mix", g.error_mix);
    scalar("delta_b", g.delta_b);
    scalar("epsilon", g.epsilon);
    scalar("k_v", g.k_v);
    scalar("rho_v", g.rho_v);
    scalar("k_j", g.k_j);
    scalar("sigma_j", g.sigma_j);
    scalar("c_s", g.c_s);
    scalar("rho_s", g.rho_s);
    scalar("e_ib", g.e_ib);
    scalar("rho_e", g.rho_e);
    scalar("filter_wn", g.filter_wn);
    scalar("filter_zeta", g.filter_zeta);
    scalar("k_rf", g.k_rf);
    scalar("f_hover", g.f_hover);
    scalar("eps_k", g.eps_k);
    vec("attitude_weight", g.attitude_weight);
    vec("k_s", g.k_s);
    vec("k_p", g.k_p);
    vec("k_vel", g.k_vel);
    vec("k_ep", g.k_ep);
    vec("k_ev", g.k_ev);
    vec("k_ei", g.k_ei);
    vec("k_ip", g.k_ip);
    vec("k_iv", g.k_iv);
    vec("g_p", g.g_p);
    vec("g_v", g.g_v);
    vec("g_z", g.g_z);
    vec("k_ep2", g.k_ep2);
    vec("k_p2", g.k_p2);
    vec("k_ev2", g.k_ev2);
    vec("k_s3", g.k_s3);
    vec("k_v3", g.k_v3);
    vec("k_ep3", g.k_ep3);
    vec("k_ev3", g.k_ev3);
    vec("k_omega_f", g.k_omega_f);
    vec("tracker_weight", g.tracker_weight);
}

Scenario Scenario::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario: " + path);
    json j;
    in >> j;
    Scenario sc;
    const std::filesystem::path base = std::filesystem::path(path).parent_path();
    sc.robot_config_path = (base / std::string(j.at("robot"))).string();
    sc.task = task_from_string(j.at("task"));
    sc.controller = j.value("controller", std::string{});
    sc.duration = j.value("duration_s", 20.0);
    if (j.contains("wind_mps")) {
        sc.wind = {j.at("wind_mps").at(0), j.at("wind_mps").at(1), j.at("wind_mps").at(2)};
    }
    sc.seed = j.value("seed", static_cast<std::uint64_t>(0));
    if (j.contains("disturbance")) {
        const json& d = j.at("disturbance");
        if (d.contains("force_w"))
            sc.disturbance.force_world = {d.at("force_w").at(0), d.at("force_w").at(1),
                                          d.at("force_w").at(2)};
        if (d.contains("torque_b"))
            sc.disturbance.torque_body = {d.at("torque_b").at(0), d.at("torque_b").at(1),
                                          d.at("torque_b").at(2)};
        sc.disturbance.t_on = d.value("t_on", 0.0);
        sc.disturbance.t_off = d.value("t_off", 0.0);
    }
    if (j.contains("freq_sweep")) {
        const json& f = j.at("freq_sweep");
        sc.freq_sweep.from = f.value("from", 5.0);
        sc.freq_sweep.to = f.value("to", 19.0);
        sc.freq_sweep.step = f.value("step", 1.0);
    }
    sc.gains.f_hover = -1.0;  // filled from the robot config unless overridden
    if (j.contains("gains")) apply_gain_overrides(sc.gains, j.at("gains"));
    return sc;
}

// ---------------------------------------------------------------------------
// scenario execution

namespace {

std::vector<std::string> closed_loop_columns(std::size_t n_panels) {
    std::vector<std::string> cols{
        "t_s",    "px_m",   "py_m",      "pz_m",      "vx_mps",    "vy_mps",   "vz_mps",
        "roll_rad", "pitch_rad", "yaw_rad", "wx_radps", "wy_radps", "wz_radps",
        "f_cmd_hz", "cmd_pitch_rad", "cmd_yaw_rad", "cmd_roll_rad", "psi",
        "epx_m",  "epy_m",  "epz_m",     "thrust_body_N", "ui_x_mps", "ui_y_mps", "ui_z_mps",
        "tail_inflow_x_mps", "tail_inflow_y_mps", "tail_inflow_z_mps",
        "wing0_stroke_rad", "wing0_pitch_rad", "wing1_pitch_rad", "wing2_pitch_rad",
        "wing3_pitch_rad"};
    for (std::size_t i = 0; i < n_panels; ++i) {
        const std::string p = "panel" + std::to_string(i);
        for (const char* s : {"_fx_N", "_fy_N", "_fz_N", "_tx_Nm", "_ty_Nm", "_tz_Nm"})
            cols.push_back(p + s);
    }
    return cols;
}

void append_state_row(std::vector<double>& row, const Simulation& s) {
    const vehicle::FlappingRobot& r = s.robot();
    const vehicle::BodyState& st = r.state();
    const Vec3 euler = st.rotation.euler_zyx();
    const Vec3 ep = s.position_error();
    const vehicle::StepTelemetry& tl = r.telemetry();
    row = {s.time(),
           st.position.x, st.position.y, st.position.z,
           st.velocity.x, st.velocity.y, st.velocity.z,
           euler.x, euler.y, euler.z,
           st.omega.x, st.omega.y, st.omega.z,
           r.frequency(),
           s.command().pitch, s.command().yaw, s.command().roll,
           s.psi(),
           ep.x, ep.y, ep.z,
           tl.thrust_body,
           tl.induced_velocity_world.x, tl.induced_velocity_world.y,
           tl.induced_velocity_world.z,
           tl.tail_inflow_world.x, tl.tail_inflow_world.y, tl.tail_inflow_world.z,
           tl.wing_stroke.empty() ? 0.0 : tl.wing_stroke[0],
           tl.wing_pitch.size() > 0 ? tl.wing_pitch[0] : 0.0,
           tl.wing_pitch.size() > 1 ? tl.wing_pitch[1] : 0.0,
           tl.wing_pitch.size() > 2 ? tl.wing_pitch[2] : 0.0,
           tl.wing_pitch.size() > 3 ? tl.wing_pitch[3] : 0.0};
    for (const vehicle::PanelWrench& w : tl.panel_wrench) {
        row.push_back(w.force.x);
        row.push_back(w.force.y);
        row.push_back(w.force.z);
        row.push_back(w.torque.x);
        row.push_back(w.torque.y);
        row.push_back(w.torque.z);
    }
}

json metrics_to_json(const analysis::SeriesMetrics& m) {
    return json{{"max", m.max}, {"rms", m.rms}};
}

// steady-state windows: att-e holds settle per segment, others drop the
// leading fifth of the run
analysis::SeriesMetrics steady_metrics(TaskId task, const analysis::TimeSeries& ts) {
    if (task == TaskId::AttE) {
        std::vector<std::pair<std::size_t, std::size_t>> windows;
        const auto seg = static_cast<std::size_t>(std::llround(2.0 / ts.step));
        for (std::size_t a = 0; a + seg <= ts.size(); a += seg)
            windows.emplace_back(a + seg / 2, a + seg);
        if (windows.empty()) windows.emplace_back(ts.size() / 2, ts.size());
        return analysis::metrics_windows(ts, windows);
    }
    return analysis::metrics(ts, 0.2);
}

RunResult run_closed_loop(const Scenario& sc, const vehicle::RobotConfig& cfg,
                          const control::GainSet& gains, const std::string& out_dir) {
    Simulation s(cfg, sc.task, sc.controller, gains);
    s.set_wind(sc.wind);
    s.set_disturbance(sc.disturbance);

    const std::string csv_path = out_dir + "/telemetry.csv";
    TelemetryWriter writer(csv_path, closed_loop_columns(cfg.panels.size()));

    const auto n = static_cast<std::size_t>(std::llround(sc.duration / Simulation::kDt));
    analysis::TimeSeries psi{0.0, Simulation::kDt, {}};
    analysis::TimeSeries ep_norm{0.0, Simulation::kDt, {}};
    analysis::Vec3Series force{0.0, Simulation::kDt, {}};
    analysis::Vec3Series torque{0.0, Simulation::kDt, {}};
    psi.values.reserve(n);
    ep_norm.values.reserve(n);
    std::vector<double> row;
    for (std::size_t i = 0; i < n; ++i) {
        s.step();
        psi.values.push_back(s.psi());
        ep_norm.values.push_back(s.position_error().norm());
        Vec3 f_body, t_body;
        for (const vehicle::PanelWrench& w : s.robot().telemetry().panel_wrench) {
            f_body += w.force;
            t_body += w.torque;
        }
        force.values.push_back(f_body);
        torque.values.push_back(t_body);
        append_state_row(row, s);
        writer.write_row(row);
    }

    json summary;
    summary["schema"] = "flapsim.summary.v1";
    summary["task"] = task_to_string(sc.task);
    summary["controller"] = sc.controller;
    summary["seed"] = sc.seed;
    summary["duration_s"] = sc.duration;
    summary["kernel"] = std::string(kernels::active().name);
    summary["psi"] = metrics_to_json(steady_metrics(sc.task, psi));
    summary["e_p"] = metrics_to_json(steady_metrics(sc.task, ep_norm));
    json ups;
    const char* fnames[3] = {"fx", "fy", "fz"};
    const char* tnames[3] = {"tx", "ty", "tz"};
    for (int a = 0; a < 3; ++a) {
        ups[fnames[a]] = analysis::oscillation_statistic(force.component(a));
        ups[tnames[a]] = analysis::oscillation_statistic(torque.component(a));
    }
    summary["upsilon"] = ups;

    const std::string summary_path = out_dir + "/summary.json";
    std::ofstream out(summary_path);
    out << summary.dump(2) << "\n";
    return RunResult{0, "ok", csv_path, summary_path};
}

RunResult run_passive(const Scenario& sc, const vehicle::RobotConfig& cfg,
                      const std::string& out_dir) {
    double freq = 10.0;
    Vec3 wind = sc.wind;
    if (sc.task == TaskId::Passive2) freq = 15.0;
    if (sc.task == TaskId::Passive3) {
        freq = 15.0;
        wind = wind.norm() > 0.0 ? wind : Vec3{0.0, 0.0, 3.0};
    }
    vehicle::FlappingRobot robot(cfg);
    robot.set_fixed_base(true);
    robot.set_wind(wind);
    robot.set_frequency(freq);
    // rig mounting so a vertical wind hits mostly within the stroke plane and
    // the front/back strokes see different speeds
    robot.mutable_state().rotation = passive_rig_attitude();

    const double dt = 1e-3;
    const double duration = sc.duration > 0.0 ? sc.duration : 3.0;
    const auto n = static_cast<std::size_t>(std::llround(duration / dt));

    std::vector<std::string> cols{"t_s", "stroke_rad", "pitch_rad",
                                  "lift_x_N", "lift_y_N", "lift_z_N",
                                  "drag_x_N", "drag_y_N", "drag_z_N",
                                  "rot_x_N", "rot_y_N", "rot_z_N",
                                  "added_x_N", "added_y_N", "added_z_N"};
    const std::string csv_path = out_dir + "/telemetry.csv";
    TelemetryWriter writer(csv_path, cols);

    std::vector<double> stroke, pitch;
    stroke.reserve(n);
    pitch.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        robot.step(dt);
        const vehicle::StepTelemetry& tl = robot.telemetry();
        stroke.push_back(tl.wing_stroke[0]);
        pitch.push_back(tl.wing_pitch[0]);
        writer.write_row({robot.time(), tl.wing_stroke[0], tl.wing_pitch[0],
                          tl.wing_lift_body[0].x, tl.wing_lift_body[0].y, tl.wing_lift_body[0].z,
                          tl.wing_drag_body[0].x, tl.wing_drag_body[0].y, tl.wing_drag_body[0].z,
                          tl.wing_rot_body[0].x, tl.wing_rot_body[0].y, tl.wing_rot_body[0].z,
                          tl.wing_added_body[0].x, tl.wing_added_body[0].y,
                          tl.wing_added_body[0].z});
    }

    const auto period_samples = static_cast<std::size_t>(std::llround(1.0 / freq / dt));
    const std::size_t tail = std::min<std::size_t>(n, 5 * period_samples);
    std::vector<double> st(stroke.end() - tail, stroke.end());
    std::vector<double> pt(pitch.end() - tail, pitch.end());
    double p_max = -1e300, p_min = 1e300;
    for (double v : pt) {
        p_max = std::max(p_max, v);
        p_min = std::min(p_min, v);
    }

    json summary;
    summary["schema"] = "flapsim.summary.v1";
    summary["task"] = task_to_string(sc.task);
    summary["frequency_hz"] = freq;
    summary["pitch_max_rad"] = p_max;
    summary["pitch_min_rad"] = p_min;
    summary["pitch_lag_fraction"] = pitch_stroke_lag_fraction(st, pt, period_samples);
    const std::string summary_path = out_dir + "/summary.json";
    std::ofstream out(summary_path);
    out << summary.dump(2) << "\n";
    return RunResult{0, "ok", csv_path, summary_path};
}

RunResult run_wake_sweep(const Scenario& sc, const vehicle::RobotConfig& cfg,
                         const std::string& out_dir) {
    json points = json::array();
    for (double f = sc.freq_sweep.from; f <= sc.freq_sweep.to + 1e-9; f += sc.freq_sweep.step) {
        const double sim_time = std::max(4.0, 12.0 / f);
        const WakeDelayPoint p = measure_wake_delay(cfg, f, sim_time);
        points.push_back(json{{"frequency_hz", p.frequency},
                              {"t_delay_s", p.t_delay},
                              {"phase_delay_rad", p.phase_delay},
                              {"mean_speed_mps", p.mean_speed},
                              {"peak_speed_mps", p.peak_speed}});
    }
    json summary;
    summary["schema"] = "flapsim.wake_sweep.v1";
    summary["task"] = task_to_string(sc.task);
    summary["points"] = points;
    const std::string summary_path = out_dir + "/wake_sweep.json";
    std::ofstream out(summary_path);
    out << summary.dump(2) << "\n";
    return RunResult{0, "ok", "", summary_path};
}

RunResult run_wrench_table(const Scenario& sc, const vehicle::RobotConfig& cfg,
                           const std::string& out_dir) {
    struct Row {
        const char* label;
        double pitch;
        double yaw;
        double roll;
    };
    // wing allocation rows (a)-(i) and rudder rows 1-7
    const Row wing_rows[] = {
        {"a", M_PI / 8, -M_PI / 8, 0}, {"b", M_PI / 8, 0, 0},   {"c", M_PI / 8, M_PI / 8, 0},
        {"d", 0, -M_PI / 8, 0},        {"e", 0, 0, 0},          {"f", 0, M_PI / 8, 0},
        {"g", -M_PI / 8, -M_PI / 8, 0}, {"h", -M_PI / 8, 0, 0}, {"i", -M_PI / 8, M_PI / 8, 0},
    };
    const Row rudder_rows[] = {
        {"r1", 0, 0, -3 * M_PI / 8}, {"r2", 0, 0, -M_PI / 4}, {"r3", 0, 0, -M_PI / 8},
        {"r4", 0, 0, 0},             {"r5", 0, 0, M_PI / 8},  {"r6", 0, 0, M_PI / 4},
        {"r7", 0, 0, 3 * M_PI / 8},
    };
    json rows = json::array();
    const auto add = [&](const Row& r, double f) {
        vehicle::ActuationCommand cmd;
        cmd.pitch = r.pitch;
        cmd.yaw = r.yaw;
        cmd.roll = r.roll;
        const WrenchMeasurement m = measure_wrench(cfg, f, cmd, sc.wind);
        rows.push_back(json{{"row", r.label},
                            {"frequency_hz", f},
                            {"mean_force_N", {m.mean_force.x, m.mean_force.y, m.mean_force.z}},
                            {"mean_torque_Nm",
                             {m.mean_torque.x, m.mean_torque.y, m.mean_torque.z}},
                            {"upsilon_force",
                             {m.upsilon_force.x, m.upsilon_force.y, m.upsilon_force.z}},
                            {"upsilon_torque",
                             {m.upsilon_torque.x, m.upsilon_torque.y, m.upsilon_torque.z}}});
    };
    for (double f = sc.freq_sweep.from; f <= sc.freq_sweep.to + 1e-9; f += sc.freq_sweep.step) {
        for (const Row& r : wing_rows) add(r, f);
        for (const Row& r : rudder_rows) add(r, f);
    }
    json summary;
    summary["schema"] = "flapsim.wrench_table.v1";
    summary["task"] = task_to_string(sc.task);
    summary["rows"] = rows;
    const std::string summary_path = out_dir + "/wrench_table.json";
    std::ofstream out(summary_path);
    out << summary.dump(2) << "\n";
    return RunResult{0, "ok", "", summary_path};
}

}  // namespace

RunResult run_scenario(const Scenario& sc, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    vehicle::RobotConfig cfg = vehicle::RobotConfig::from_json_file(sc.robot_config_path);
    control::GainSet gains = sc.gains;
    if (gains.f_hover <= 0.0) gains.f_hover = cfg.f_hover;
    try {
        if (is_attitude_task(sc.task) || is_trajectory_task(sc.task)) {
            return run_closed_loop(sc, cfg, gains, out_dir);
        }
        switch (sc.task) {
            case TaskId::Passive1:
            case TaskId::Passive2:
            case TaskId::Passive3:
                return run_passive(sc, cfg, out_dir);
            case TaskId::WakeSweep:
                return run_wake_sweep(sc, cfg, out_dir);
            case TaskId::WrenchTable:
                return run_wrench_table(sc, cfg, out_dir);
            default:
                return RunResult{2, "unsupported task", "", ""};
        }
    } catch (const vehicle::DivergenceError& e) {
        return RunResult{1, e.what(), "", ""};
    }
}

}  // namespace flapsim::sim
