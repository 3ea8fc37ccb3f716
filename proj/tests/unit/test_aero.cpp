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

#include <cmath>
#include <stdexcept>
#include <random>

#include <doctest.h>

#include "flapsim/aero.hpp"

using namespace flapsim;
using namespace flapsim::aero;

namespace {

// independent scalar evaluation of the Reynolds power laws
struct PowerLawOracle {
    double a_l, a_d, c_d0;
    explicit PowerLawOracle(double re)
        : a_l(1.966 - 3.94 * std::exp(-0.429 * std::log(re))),
          a_d(1.873 - 3.14 * std::exp(-0.369 * std::log(re))),
          c_d0(0.031 + 10.48 * std::exp(-0.764 * std::log(re))) {}
};

std::mt19937_64 rng(11);
std::uniform_real_distribution<double> unit(-1.0, 1.0);

Vec3 random_unit() {
    Vec3 v{unit(rng), unit(rng), unit(rng)};
    while (v.norm() < 1e-3) v = {unit(rng), unit(rng), unit(rng)};
    return v.normalized();
}

geom::BladeElement element(double chord = 0.05, double dr = 0.0035) {
    geom::BladeElement el;
    el.chord = chord;
    el.dr = dr;
    el.r = 0.07;
    return el;
}

}  // namespace

TEST_CASE("Reynolds power laws at Re 7000 match the frozen oracle") {
    const PowerLawOracle want(7000.0);
    const ReynoldsCoefficients got = reynolds_coefficients(7000.0);
    // frozen oracle values
    CHECK(want.a_l == doctest::Approx(1.8777023464482545).epsilon(1e-12));
    CHECK(want.a_d == doctest::Approx(1.7533015652596773).epsilon(1e-12));
    CHECK(want.c_d0 == doctest::Approx(0.04309779943097362).epsilon(1e-12));
    CHECK(got.a_lift == doctest::Approx(want.a_l).epsilon(1e-9));
    CHECK(got.a_drag == doctest::Approx(want.a_d).epsilon(1e-9));
    CHECK(got.c_d0 == doctest::Approx(want.c_d0).epsilon(1e-9));
    CHECK_THROWS_AS(reynolds_coefficients(0.0), std::invalid_argument);
}

TEST_CASE("lift and drag coefficient curves") {
    const PowerLawOracle o(7000.0);
    SUBCASE("alpha = 0: no lift, C_D0 drag") {
        const LiftDragCoefficients c = aero_coefficients(0.0, 7000.0);
        CHECK(c.c_lt == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(c.c_dt == doctest::Approx(o.c_d0).epsilon(1e-9));
    }
    SUBCASE("alpha = pi/4: peak lift equals A_L") {
        const LiftDragCoefficients c = aero_coefficients(M_PI / 4.0, 7000.0);
        CHECK(c.c_lt == doctest::Approx(o.a_l).epsilon(1e-9));
    }
    SUBCASE("symmetry and drag extremum") {
        for (double a = 0.0; a <= M_PI / 2; a += 0.05) {
            const auto c1 = aero_coefficients(a, 7000.0);
            const auto c2 = aero_coefficients(M_PI - a, 7000.0);
            CHECK(c1.c_lt == doctest::Approx(-c2.c_lt).epsilon(1e-9));  // sin(2a) parity
            CHECK(c1.c_dt == doctest::Approx(c2.c_dt).epsilon(1e-9));
            CHECK(c1.c_dt <= aero_coefficients(M_PI / 2, 7000.0).c_dt + 1e-12);
        }
    }
}

TEST_CASE("rotational coefficient") {
    CHECK(rotational_coefficient(0.75) == 0.0);
    CHECK(rotational_coefficient(0.0) == doctest::Approx(2.356194490192345).epsilon(1e-12));
    CHECK(rotational_coefficient(1.0) == doctest::Approx(-0.7853981633974483).epsilon(1e-12));
    CHECK_THROWS_AS(rotational_coefficient(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(rotational_coefficient(1.1), std::invalid_argument);
}

TEST_CASE("effective velocity projection") {
    CHECK(effective_velocity({}, {}, {}, {}, {0, 1, 0}).norm() == 0.0);
    // purely spanwise flow is removed
    const Vec3 v = effective_velocity({0, 2, 0}, {}, {}, {}, {0, 1, 0});
    CHECK(v.norm() < 1e-12);
    const Vec3 w = effective_velocity({1, 1, 0}, {}, {}, {}, {0, 1, 0});
    CHECK(w.x == doctest::Approx(1.0));
    CHECK(w.y == doctest::Approx(0.0));
    // perpendicularity always holds
    for (int i = 0; i < 50; ++i) {
        const Vec3 n = random_unit();
        const Vec3 u = effective_velocity({unit(rng), unit(rng), unit(rng)},
                                          {unit(rng), unit(rng), unit(rng)},
                                          {unit(rng), unit(rng), unit(rng)},
                                          {unit(rng), unit(rng), unit(rng)}, n);
        CHECK(std::fabs(u.dot(n)) < 1e-12);
    }
}

TEST_CASE("angle of attack") {
    CHECK(angle_of_attack({2, 0, 0}, {1, 0, 0}).alpha == doctest::Approx(0.0));
    CHECK(angle_of_attack({0, 0, 3}, {1, 0, 0}).alpha == doctest::Approx(M_PI / 2));
    const Vec3 diag = Vec3{1, 0, 1}.normalized();
    CHECK(angle_of_attack({1, 0, 0}, diag).alpha == doctest::Approx(M_PI / 4));
    const AngleOfAttack still = angle_of_attack({1e-9, 0, 0}, {1, 0, 0});
    CHECK(still.zero_flow);
    CHECK(still.alpha == 0.0);
}

TEST_CASE("strip forces magnitudes against the scalar oracle") {
    AeroEnvironment env;
    env.rho = 1.29;
    env.reynolds = 7000.0;
    const geom::BladeElement el = element();

    SUBCASE("still air gives nothing") {
        StripKinematics k;
        k.zero_flow = true;
        k.chord_dir = {1, 0, 0};
        k.plane_normal = {0, 1, 0};
        const StripForces f = strip_forces(k, el, env);
        CHECK(f.lift.norm() == 0.0);
        CHECK(f.drag.norm() == 0.0);
        CHECK(f.rotational.norm() == 0.0);
        CHECK(f.added_mass.norm() == 0.0);
    }
    SUBCASE("translational lift magnitude, alpha = pi/4, |u| = 2") {
        // oracle: 1/2 rho c |u|^2 A_L sin(2 alpha) dr, computed independently
        const PowerLawOracle o(7000.0);
        const double want = 0.5 * 1.29 * 0.05 * 4.0 * (o.a_l * std::sin(M_PI / 2)) * 0.0035;
        CHECK(want == doctest::Approx(8.477826094213869e-4).epsilon(1e-9));  // frozen
        StripKinematics k;
        // chord along x, flow rotated pi/4 inside the x-z plane
        k.chord_dir = {1, 0, 0};
        k.plane_normal = {0, 1, 0};
        k.u_w = Vec3{std::cos(M_PI / 4), 0, std::sin(M_PI / 4)} * 2.0;
        k.alpha = angle_of_attack(k.u_w, k.chord_dir).alpha;
        const StripForces f = strip_forces(k, el, env);
        CHECK(f.lift.norm() == doctest::Approx(want).epsilon(1e-9));
        // CoP at alpha/pi
        CHECK(f.cop_translational == doctest::Approx(0.25).epsilon(1e-9));
    }
    SUBCASE("translational CoP hits 1/2 at alpha = pi/2") {
        StripKinematics k;
        k.chord_dir = {1, 0, 0};
        k.plane_normal = {0, 1, 0};
        k.u_w = {0, 0, 2.0};
        k.alpha = M_PI / 2;
        const StripForces f = strip_forces(k, el, env);
        CHECK(f.cop_translational == doctest::Approx(0.5).epsilon(1e-9));
    }
    SUBCASE("lift is perpendicular to flow, drag along it; total is the sum") {
        for (int i = 0; i < 200; ++i) {
            StripKinematics k;
            k.plane_normal = random_unit();
            Vec3 c = random_unit();
            c = (c - k.plane_normal * k.plane_normal.dot(c)).normalized();
            if (c.norm() < 0.5) continue;
            k.chord_dir = c;
            Vec3 u{unit(rng) * 3, unit(rng) * 3, unit(rng) * 3};
            u = u - k.plane_normal * k.plane_normal.dot(u);
            if (u.norm() < 1e-3) continue;
            k.u_w = u;
            k.u_dot = {unit(rng) * 50, unit(rng) * 50, unit(rng) * 50};
            k.alpha = angle_of_attack(u, c).alpha;
            k.alpha_rate = unit(rng) * 30;
            const StripForces f = strip_forces(k, el, env);
            CHECK(std::fabs(f.lift.dot(k.u_w)) < 1e-9);
            CHECK(f.drag.cross(k.u_w).norm() < 1e-9);
            CHECK(f.drag.dot(k.u_w) >= 0.0);  // drag opposes the wing velocity
            const Vec3 total = f.total();
            const Vec3 sum = f.lift + f.drag + f.rotational + f.added_mass;
            CHECK((total - sum).norm() == 0.0);
            // rotational force magnitude per the printed product
            const double want_rot = 1.29 * el.chord * el.chord * std::fabs(k.alpha_rate) *
                                    k.u_w.norm() * rotational_coefficient(0.0) * el.dr;
            CHECK(f.rotational.norm() == doctest::Approx(want_rot).epsilon(1e-9));
        }
    }
    SUBCASE("lift flips sign with the chord side") {
        StripKinematics k;
        k.plane_normal = {0, 1, 0};
        k.u_w = {-2.0, 0, 0};
        // chord hanging caudally, tilted dorsally: lift up
        k.chord_dir = Vec3{-std::sin(0.3), 0, -std::cos(0.3)};
        k.alpha = angle_of_attack(k.u_w, k.chord_dir).alpha;
        const StripForces up = strip_forces(k, el, env);
        CHECK(up.lift.z > 0.0);
        // mirrored pitch: lift down
        k.chord_dir = Vec3{std::sin(0.3), 0, -std::cos(0.3)};
        k.alpha = angle_of_attack(k.u_w, k.chord_dir).alpha;
        const StripForces down = strip_forces(k, el, env);
        CHECK(down.lift.z < 0.0);
        CHECK(down.lift.norm() == doctest::Approx(up.lift.norm()).epsilon(1e-9));
    }
}

TEST_CASE("strip moment") {
    AeroEnvironment env;
    const geom::BladeElement el = element(0.06, 0.004);
    const Vec3 chord{1, 0, 0};
    const Vec3 axis{0, 1, 0};

    SUBCASE("zero forces give zero moment") {
        CHECK(strip_moment(StripForces{}, el, chord, axis) == 0.0);
    }
    SUBCASE("single normal force at half chord") {
        StripForces f;
        f.rotational = {0, 0, 2.0};  // rotational CoP sits at c/2
        const double m = strip_moment(f, el, chord, axis);
        CHECK(std::fabs(m) == doctest::Approx(2.0 * 0.03).epsilon(1e-12));
    }
    SUBCASE("composite matches the per-term sum") {
        StripKinematics k;
        k.plane_normal = {0, 1, 0};
        k.u_w = {-2.0, 0, -0.4};
        k.chord_dir = Vec3{-std::sin(0.4), 0, -std::cos(0.4)};
        k.alpha = angle_of_attack(k.u_w, k.chord_dir).alpha;
        k.alpha_rate = 12.0;
        k.u_dot = {30.0, 0, 5.0};
        const StripForces f = strip_forces(k, el, env);
        const double got = strip_moment(f, el, k.chord_dir, k.plane_normal);
        // oracle: per-term lever arms
        double want = 0.0;
        want += (k.chord_dir * (f.cop_translational * el.chord)).cross(f.lift + f.drag)
                    .dot(k.plane_normal);
        want += (k.chord_dir * (0.5 * el.chord)).cross(f.rotational).dot(k.plane_normal);
        want += (k.chord_dir * (9.0 / 16.0 * el.chord)).cross(f.added_mass).dot(k.plane_normal);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("actuator-disk induced velocity") {
    CHECK(induced_velocity({0, 0, 0}, 0.02, 1.29).norm() == 0.0);
    // hover-scale magnitude, frozen oracle value
    const Vec3 u = induced_velocity({0, 0, 0.2156}, 0.02, 1.29);
    CHECK(u.z == doctest::Approx(1.0220438559136553).epsilon(1e-9));
    CHECK(u.x == 0.0);
    // square-root law: scaling the lift by 4 doubles the speed
    const Vec3 u4 = induced_velocity({0, 0, 4 * 0.2156}, 0.02, 1.29);
    CHECK(u4.norm() == doctest::Approx(2.0 * u.norm()).epsilon(1e-12));
    CHECK_THROWS_AS(induced_velocity({0, 0, 1}, 0.0, 1.29), std::invalid_argument);
}
