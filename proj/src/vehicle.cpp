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

#include "flapsim/vehicle.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "flapsim/kernels.hpp"

namespace flapsim::vehicle {

using nlohmann::json;

StrokeSample stroke_angle(double t, double frequency, double amplitude_pp) {
    if (!(frequency > 0.0)) throw std::invalid_argument("stroke_angle: frequency must be > 0");
    const double w = 2.0 * M_PI * frequency;
    const double a = 0.5 * amplitude_pp;
    StrokeSample s;
    s.angle = a * std::sin(w * t);
    s.rate = a * w * std::cos(w * t);
    s.accel = -a * w * w * std::sin(w * t);
    return s;
}

Allocation allocate(const ActuationCommand& cmd, const RobotConfig& cfg) {
    Allocation out;
    const double lim = cfg.eq_pitch_range;
    const double left = cmd.pitch - cmd.yaw;
    const double right = cmd.pitch + cmd.yaw;
    out.eq_left = clamp(left, -lim, lim);
    out.eq_right = clamp(right, -lim, lim);
    out.rudder = clamp(cmd.roll, -cfg.rudder_range, cfg.rudder_range);
    out.clamped = out.eq_left != left || out.eq_right != right || out.rudder != cmd.roll;
    return out;
}

WingHingeState passive_pitch_step(const WingHingeState& h, double aero_moment, double spring_k,
                                  double stop_angle, double inertia, double damping, double dt,
                                  double damping_quad) {
    if (!(dt > 0.0)) throw std::invalid_argument("passive_pitch_step: dt must be > 0");
    WingHingeState out = h;
    const double accel =
        (aero_moment - spring_k * (h.pitch - h.eq_pitch) - damping * h.pitch_rate -
         damping_quad * std::fabs(h.pitch_rate) * h.pitch_rate) /
        inertia;
    out.pitch_rate = h.pitch_rate + dt * accel;
    out.pitch = h.pitch + dt * out.pitch_rate;
    if (out.pitch > stop_angle) {
        out.pitch = stop_angle;
        out.pitch_rate = 0.0;
    } else if (out.pitch < -stop_angle) {
        out.pitch = -stop_angle;
        out.pitch_rate = 0.0;
    }
    return out;
}

void FlappingRobot::Scratch::resize(std::size_t n) {
    for (auto* v : {&ux, &uy, &uz, &dux, &duy, &duz, &cx, &cy, &cz, &ax, &ay, &az, &chord, &dr,
                    &lift_x, &lift_y, &lift_z, &drag_x, &drag_y, &drag_z, &rot_x, &rot_y, &rot_z,
                    &add_x, &add_y, &add_z, &alpha, &cop_t}) {
        v->resize(n);
    }
}

FlappingRobot::FlappingRobot(RobotConfig cfg)
    : cfg_(std::move(cfg)), wake_(cfg_.wing_tail_distance) {
    std::size_t max_strips = 1;
    for (std::size_t i = 0; i < cfg_.panels.size(); ++i) {
        const PanelConfig& p = cfg_.panels[i];
        max_strips = std::max(max_strips, p.elements.size());
        if (p.kind == PanelKind::Wing) wing_panels_.push_back(i);
    }
    wing_states_.resize(wing_panels_.size());
    hinge_moment_.resize(wing_panels_.size(), 0.0);
    scratch_.resize(max_strips);
    u_prev_.resize(cfg_.panels.size());
    for (std::size_t i = 0; i < cfg_.panels.size(); ++i)
        u_prev_[i].assign(cfg_.panels[i].elements.size(), Vec3{});
    telem_.panel_wrench.resize(cfg_.panels.size());
    const std::size_t nw = wing_panels_.size();
    telem_.wing_stroke.resize(nw);
    telem_.wing_pitch.resize(nw);
    telem_.wing_lift_body.resize(nw);
    telem_.wing_drag_body.resize(nw);
    telem_.wing_rot_body.resize(nw);
    telem_.wing_added_body.resize(nw);
    re_coef_ = aero::reynolds_coefficients(cfg_.reynolds);
    c_rot_ = aero::rotational_coefficient(0.0);
    frequency_ = cfg_.f_hover;
}

void FlappingRobot::command(const ActuationCommand& cmd) {
    const Allocation a = allocate(cmd, cfg_);
    for (std::size_t w = 0; w < wing_panels_.size(); ++w) {
        const PanelConfig& p = cfg_.panels[wing_panels_[w]];
        // left wings have a +Y spar component at mid-stroke
        wing_states_[w].eq_pitch = p.spar_mid.y > 0.0 ? a.eq_left : a.eq_right;
    }
    rudder_ = a.rudder;
    if (cmd.frequency > 0.0) frequency_ = clamp(cmd.frequency, cfg_.f_min, cfg_.f_max);
}

void FlappingRobot::evaluate_panels(double dt) {
    const Mat3& r = state_.rotation.matrix();

    telem_.aero_force_world = {};
    telem_.aero_torque_body = {};
    telem_.wing_lift_sum_world = {};

    const double a_half = 0.5 * cfg_.stroke_amplitude;
    const double w_stroke = 2.0 * M_PI * frequency_;
    const double phi_g = a_half * std::sin(stroke_phase_);
    const double phi_g_rate = a_half * w_stroke * std::cos(stroke_phase_);

    // tail inflow: free stream plus the delayed induced velocity, reversed
    // into the caudal transport direction
    const Vec3 u_i_delayed = wake_.sample_delayed(time_, 1.0 / frequency_);
    telem_.tail_inflow_world = u_i_delayed * -1.0;

    Vec3 torque_world_total;

    for (std::size_t pi = 0; pi < cfg_.panels.size(); ++pi) {
        const PanelConfig& p = cfg_.panels[pi];
        const std::size_t n = p.elements.size();
        const bool is_wing = p.kind == PanelKind::Wing;

        double stroke = 0.0, stroke_rate = 0.0, pitch = 0.0, pitch_rate = 0.0;
        if (is_wing) {
            stroke = p.stroke_sign * phi_g;
            stroke_rate = p.stroke_sign * phi_g_rate;
            std::size_t w = 0;
            while (wing_panels_[w] != pi) ++w;
            pitch = wing_states_[w].pitch;
            pitch_rate = wing_states_[w].pitch_rate;
            wing_states_[w].stroke = stroke;
            wing_states_[w].stroke_rate = stroke_rate;
        } else if (p.kind == PanelKind::TailRudder) {
            pitch = rudder_;
        }

        const Mat3 r_stroke = spatial::exp_so3(p.stroke_axis * stroke);
        const Vec3 spar_b = r_stroke * p.spar_mid;
        const Vec3 chord0_b = r_stroke * p.chord_zero;
        const Vec3 hinge_b = spar_b * p.hinge_sign;
        const Vec3 chord_b = spatial::exp_so3(hinge_b * pitch) * chord0_b;

        const Vec3 spar_w = r * spar_b;
        const Vec3 chord_w = r * chord_b;
        const Vec3 hinge_w = r * hinge_b;

        const Vec3 inflow_w = is_wing ? wind_ : wind_ + telem_.tail_inflow_world;

        for (std::size_t k = 0; k < n; ++k) {
            const double rk = p.elements[k].r;
            const Vec3 r_b = p.root + spar_b * rk;
            const Vec3 v_panel_b = p.stroke_axis.cross(spar_b * rk) * stroke_rate;
            const Vec3 v_strip_w = state_.velocity + r * (state_.omega.cross(r_b) + v_panel_b);
            const Vec3 u_raw = inflow_w - v_strip_w;
            const Vec3 u = u_raw - spar_w * spar_w.dot(u_raw);
            Vec3& prev = u_prev_[pi][k];
            const Vec3 du = step_count_ == 0 ? Vec3{} : (u - prev) / dt;
            prev = u;
            scratch_.ux[k] = u.x;
            scratch_.uy[k] = u.y;
            scratch_.uz[k] = u.z;
            scratch_.dux[k] = du.x;
            scratch_.duy[k] = du.y;
            scratch_.duz[k] = du.z;
            scratch_.cx[k] = chord_w.x;
            scratch_.cy[k] = chord_w.y;
            scratch_.cz[k] = chord_w.z;
            scratch_.ax[k] = hinge_w.x;
            scratch_.ay[k] = hinge_w.y;
            scratch_.az[k] = hinge_w.z;
            scratch_.chord[k] = p.elements[k].chord;
            scratch_.dr[k] = p.elements[k].dr;
        }

        kernels::StripBatchIn in{scratch_.ux.data(), scratch_.uy.data(), scratch_.uz.data(),
                                 scratch_.dux.data(), scratch_.duy.data(), scratch_.duz.data(),
                                 scratch_.cx.data(), scratch_.cy.data(), scratch_.cz.data(),
                                 scratch_.ax.data(), scratch_.ay.data(), scratch_.az.data(),
                                 scratch_.chord.data(), scratch_.dr.data(),
                                 pitch_rate, cfg_.air_density, re_coef_.a_lift, re_coef_.a_drag,
                                 re_coef_.c_d0, c_rot_, n};
        kernels::StripBatchOut out{scratch_.lift_x.data(), scratch_.lift_y.data(),
                                   scratch_.lift_z.data(), scratch_.drag_x.data(),
                                   scratch_.drag_y.data(), scratch_.drag_z.data(),
                                   scratch_.rot_x.data(), scratch_.rot_y.data(),
                                   scratch_.rot_z.data(), scratch_.add_x.data(),
                                   scratch_.add_y.data(), scratch_.add_z.data(),
                                   scratch_.alpha.data(), scratch_.cop_t.data()};
        kernels::active().strip_forces(in, out);

        Vec3 force_w;
        Vec3 torque_w;
        double hinge_m = 0.0;
        Vec3 sum_lift, sum_drag, sum_rot, sum_add;
        for (std::size_t k = 0; k < n; ++k) {
            const geom::BladeElement& el = p.elements[k];
            const Vec3 lift{scratch_.lift_x[k], scratch_.lift_y[k], scratch_.lift_z[k]};
            const Vec3 drag{scratch_.drag_x[k], scratch_.drag_y[k], scratch_.drag_z[k]};
            const Vec3 rot{scratch_.rot_x[k], scratch_.rot_y[k], scratch_.rot_z[k]};
            const Vec3 added{scratch_.add_x[k], scratch_.add_y[k], scratch_.add_z[k]};
            const Vec3 le_w = r * (p.root + spar_b * el.r);
            const Vec3 arm_t = chord_w * (el.le_offset + scratch_.cop_t[k] * el.chord);
            const Vec3 arm_r =
                chord_w * (el.le_offset + aero::StripForces::kCopRotational * el.chord);
            const Vec3 arm_a =
                chord_w * (el.le_offset + aero::StripForces::kCopAddedMass * el.chord);
            force_w += lift + drag + rot + added;
            torque_w += (le_w + arm_t).cross(lift + drag);
            torque_w += (le_w + arm_r).cross(rot);
            torque_w += (le_w + arm_a).cross(added);
            hinge_m += arm_t.cross(lift + drag).dot(hinge_w);
            hinge_m += arm_r.cross(rot).dot(hinge_w);
            hinge_m += arm_a.cross(added).dot(hinge_w);
            sum_lift += lift;
            sum_drag += drag;
            sum_rot += rot;
            sum_add += added;
        }
        if (is_wing) {
            telem_.wing_lift_sum_world += sum_lift;
            std::size_t w = 0;
            while (wing_panels_[w] != pi) ++w;
            hinge_moment_[w] = hinge_m;
            telem_.wing_stroke[w] = stroke;
            telem_.wing_pitch[w] = pitch;
            const Mat3 rt = r.transpose();
            telem_.wing_lift_body[w] = rt * sum_lift;
            telem_.wing_drag_body[w] = rt * sum_drag;
            telem_.wing_rot_body[w] = rt * sum_rot;
            telem_.wing_added_body[w] = rt * sum_add;
        }

        telem_.aero_force_world += force_w;
        torque_world_total += torque_w;
        const Mat3 rt = r.transpose();
        telem_.panel_wrench[pi].force = rt * force_w;
        telem_.panel_wrench[pi].torque = rt * torque_w;
    }

    telem_.aero_torque_body = r.transpose() * torque_world_total;
    telem_.thrust_body = (r.transpose() * telem_.aero_force_world).z;
    telem_.induced_velocity_world = aero::induced_velocity(
        telem_.wing_lift_sum_world, cfg_.effective_disk_area(), cfg_.air_density);
}

void FlappingRobot::step(double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("FlappingRobot::step: dt must be > 0");

    if (aero_on_) {
        evaluate_panels(dt);
    } else {
        telem_.aero_force_world = {};
        telem_.aero_torque_body = {};
        telem_.wing_lift_sum_world = {};
        telem_.induced_velocity_world = {};
    }

    // wake record after sampling: the tail saw the buffer as of the previous
    // samples this step
    wake_.push(time_ + dt, telem_.induced_velocity_world);

    // body dynamics
    if (!fixed_base_) {
        Vec3 force_w = telem_.aero_force_world + dist_force_;
        if (gravity_on_) force_w += Vec3{0.0, 0.0, -cfg_.mass * cfg_.gravity};
        const Vec3 torque_b = telem_.aero_torque_body + dist_torque_;
        const Vec3 omega_dot =
            cfg_.inertia.inverse() *
            (torque_b - state_.omega.cross(cfg_.inertia * state_.omega));
        state_.omega += omega_dot * dt;
        state_.rotation = spatial::integrate_rotation(state_.rotation, state_.omega, dt);
        if ((step_count_ + 1) % 1000 == 0) state_.rotation = state_.rotation.renormalized();
        state_.velocity += force_w * (dt / cfg_.mass);
        state_.position += state_.velocity * dt;
    }

    // passive pitch dynamics
    if (aero_on_) {
        for (std::size_t w = 0; w < wing_panels_.size(); ++w) {
            const PanelConfig& p = cfg_.panels[wing_panels_[w]];
            wing_states_[w] =
                passive_pitch_step(wing_states_[w], hinge_moment_[w], cfg_.spring_k,
                                   cfg_.pitch_stop, p.inertia, p.damping, dt, p.damping_quad);
        }
    }

    stroke_phase_ += 2.0 * M_PI * frequency_ * dt;
    time_ += dt;
    ++step_count_;

    if (!state_.rotation.is_finite() || !state_.omega.is_finite() ||
        !state_.position.is_finite() || !state_.velocity.is_finite()) {
        throw DivergenceError(step_count_);
    }
    for (const WingHingeState& ws : wing_states_) {
        if (!std::isfinite(ws.pitch) || !std::isfinite(ws.pitch_rate)) {
            throw DivergenceError(step_count_);
        }
    }
}

// ---------------------------------------------------------------------------
// configuration loading

static Vec3 to_vec3(const json& j) { return {j.at(0), j.at(1), j.at(2)}; }

RobotConfig RobotConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open robot config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), std::filesystem::path(path).parent_path().string());
}

RobotConfig RobotConfig::from_json_text(const std::string& text, const std::string& base_dir) {
    const json j = json::parse(text);
    RobotConfig cfg;
    cfg.mass = j.at("mass_kg");
    {
        const json& ji = j.at("inertia_kgm2");
        cfg.inertia = Mat3::diag(ji.at(0), ji.at(1), ji.at(2));
    }
    cfg.gravity = j.value("gravity", 9.81);
    cfg.air_density = j.value("air_density", 1.29);
    cfg.reynolds = j.value("reynolds", 7000.0);
    cfg.spring_k = j.value("spring_k", 0.025);
    cfg.pitch_stop = j.value("pitch_stop", M_PI / 4.0);
    cfg.eq_pitch_range = j.value("eq_pitch_range", M_PI / 4.0);
    cfg.rudder_range = j.value("rudder_range", M_PI / 4.0);
    cfg.stroke_amplitude = j.value("stroke_amplitude_p2p", M_PI / 4.0);
    cfg.disk_area = j.value("disk_area", 0.0);
    cfg.wing_tail_distance = j.value("wing_tail_distance", 0.15);
    cfg.f_hover = j.value("f_hover", 12.5);
    if (j.contains("frequency_range")) {
        cfg.f_min = j.at("frequency_range").at(0);
        cfg.f_max = j.at("frequency_range").at(1);
    }
    if (j.contains("torque_to_command")) cfg.torque_to_command = to_vec3(j.at("torque_to_command"));

    const Vec3 stroke_center = to_vec3(j.at("stroke_center"));
    const double wing_dz = j.value("wing_z_offset", 0.005);
    const double dihedral = j.value("wing_dihedral", 0.17);

    const json& jw = j.at("wing");
    cfg.wing_span = jw.at("span");
    const int n_strips = jw.at("strips");
    const int fit_degree = jw.value("fit_degree", 4);
    const double areal_density = jw.value("areal_density", 0.08);
    const double pitch_damping = jw.value("pitch_damping", 1e-5);
    const double pitch_damping_quad = jw.value("pitch_damping_quad", 0.0);

    std::vector<geom::BladeElement> wing_elems;
    if (jw.contains("planform_csv")) {
        const std::string csv =
            (std::filesystem::path(base_dir) / std::string(jw.at("planform_csv"))).string();
        const geom::WingOutline outline = geom::load_outline_csv(csv);
        const geom::ChordFit fit = geom::fit_edge(outline, fit_degree);
        wing_elems = geom::build_blade_elements(fit, cfg.wing_span, n_strips);
    } else {
        wing_elems = geom::uniform_blade_elements(jw.at("chord"), cfg.wing_span, n_strips);
    }
    double wing_inertia = 0.0;
    for (const geom::BladeElement& el : wing_elems) {
        wing_inertia += areal_density * el.dr * el.chord * el.chord * el.chord / 3.0;
    }

    const double cant = j.value("wing_cant", 0.0);
    const double cb = std::cos(dihedral), sb = std::sin(dihedral);
    struct WingSpec {
        const char* name;
        double side;    // +1 left, -1 right
        double vert;    // +1 upper, -1 lower
        double stroke;  // stroke sign
    };
    const WingSpec wings[4] = {{"wing_upper_left", 1.0, 1.0, 1.0},
                               {"wing_lower_left", 1.0, -1.0, -1.0},
                               {"wing_upper_right", -1.0, 1.0, -1.0},
                               {"wing_lower_right", -1.0, -1.0, 1.0}};
    for (const WingSpec& ws : wings) {
        PanelConfig p;
        p.name = ws.name;
        p.kind = PanelKind::Wing;
        p.root = stroke_center + Vec3{0.0, 0.0, ws.vert * wing_dz};
        p.spar_mid = Vec3{0.0, ws.side * cb, ws.vert * sb};
        // chord at zero pitch: -Z projected perpendicular to the spar
        const Vec3 mz{0.0, 0.0, -1.0};
        p.chord_zero = (mz - p.spar_mid * p.spar_mid.dot(mz)).normalized();
        p.hinge_sign = ws.side;  // positive pitch swings the trailing edge dorsally
        p.stroke_sign = ws.stroke;
        // cant the whole flapping module outward about the ventral axis
        // only the upper pair is canted; the lower pair sweeps about the body axis
        const double cant_here = ws.vert > 0.0 ? ws.side * cant : 0.0;
        const Mat3 r_cant = spatial::exp_so3(Vec3{1.0, 0.0, 0.0} * cant_here);
        p.stroke_axis = r_cant * p.stroke_axis;
        p.spar_mid = r_cant * p.spar_mid;
        p.chord_zero = r_cant * p.chord_zero;
        p.inertia = wing_inertia;
        p.damping = pitch_damping;
        p.damping_quad = pitch_damping_quad;
        p.elements = wing_elems;
        cfg.panels.push_back(std::move(p));
    }

    if (j.contains("tail_horizontal")) {
        const json& jt = j.at("tail_horizontal");
        const double span = jt.at("span_per_side");
        const double chord = jt.at("chord");
        const int strips = jt.at("strips_per_side");
        const double z = jt.at("z");
        for (double side : {1.0, -1.0}) {
            PanelConfig p;
            p.name = side > 0 ? "tail_horizontal_left" : "tail_horizontal_right";
            p.kind = PanelKind::TailFixed;
            p.root = Vec3{0.0, 0.0, z};
            p.spar_mid = Vec3{0.0, side, 0.0};
            p.chord_zero = Vec3{0.0, 0.0, -1.0};
            p.hinge_sign = side;
            p.stroke_sign = 0.0;
            p.elements = geom::uniform_blade_elements(chord, span, strips);
            cfg.panels.push_back(std::move(p));
        }
    }
    if (j.contains("tail_vertical")) {
        const json& jt = j.at("tail_vertical");
        PanelConfig p;
        p.name = "tail_vertical";
        p.kind = PanelKind::TailRudder;
        p.root = Vec3{0.0, 0.0, jt.at("z")};
        p.spar_mid = Vec3{-1.0, 0.0, 0.0};  // fin extends dorsally
        p.chord_zero = Vec3{0.0, 0.0, -1.0};
        p.hinge_sign = 1.0;  // positive rudder swings the trailing edge right
        p.stroke_sign = 0.0;
        p.elements = geom::uniform_blade_elements(jt.at("chord"), jt.at("span"), jt.at("strips"));
        cfg.panels.push_back(std::move(p));
    }
    return cfg;
}

}  // namespace flapsim::vehicle
