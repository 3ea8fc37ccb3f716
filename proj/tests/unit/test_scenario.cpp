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
#include <cstdio>
#include <fstream>

#include <doctest.h>

#include "flapsim/scenario.hpp"

using namespace flapsim;
using namespace flapsim::sim;

TEST_CASE("task ids round trip") {
    for (const char* name : {"att-a", "att-b1", "att-e", "traj-vcir", "traj-p2p", "passive-3",
                             "wake-sweep", "wrench-table"}) {
        CHECK(task_to_string(task_from_string(name)) == name);
    }
    CHECK_THROWS_AS(task_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("printed reference trajectories") {
    SUBCASE("circle") {
        const Vec3 p0 = trajectory_position(TaskId::TrajVCir, 0.0);
        CHECK(p0.norm() == doctest::Approx(0.0));
        const Vec3 p5 = trajectory_position(TaskId::TrajVCir, 5.0);
        CHECK(p5.x == doctest::Approx(4.0));
        CHECK(p5.y == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(p5.z == 0.0);
    }
    SUBCASE("point to point schedule") {
        CHECK(trajectory_position(TaskId::TrajP2P, 1.0).norm() == 0.0);
        const Vec3 p3 = trajectory_position(TaskId::TrajP2P, 3.0);
        CHECK(p3.x == doctest::Approx(2.0));
        CHECK(p3.y == doctest::Approx(2.0));
        CHECK(p3.z == doctest::Approx(2.0));
        CHECK(trajectory_position(TaskId::TrajP2P, 9.0).norm() == 0.0);
    }
    SUBCASE("lemniscate closes and derivatives are consistent") {
        const Vec3 p0 = trajectory_position(TaskId::TrajLem, 0.0);
        const Vec3 p10 = trajectory_position(TaskId::TrajLem, 10.0);
        CHECK((p10 - p0).norm() < 1e-9);
        // finite-difference consistency of v and a
        const double t = 1.7, h = 1e-5;
        const Vec3 v_fd = (trajectory_position(TaskId::TrajLem, t + h) -
                           trajectory_position(TaskId::TrajLem, t - h)) /
                          (2 * h);
        CHECK((trajectory_velocity(TaskId::TrajLem, t) - v_fd).norm() < 1e-5);
    }
    SUBCASE("circle velocity magnitude") {
        const Vec3 v = trajectory_velocity(TaskId::TrajVCir, 1.234);
        CHECK(v.norm() == doctest::Approx(2.0 * 0.2 * M_PI).epsilon(1e-9));
    }
}

TEST_CASE("attitude reference provider integrates Rd") {
    ReferenceProvider prov(TaskId::AttA, 1e-3);
    Reference ref;
    for (int i = 0; i < 1000; ++i) ref = prov.step();
    // after 1 s at 0.5 pi rad/s the attitude rolled by pi/2 about x
    const spatial::Rotation want = spatial::Rotation::axis_angle({1, 0, 0}, 0.5 * M_PI);
    CHECK(ref.r_d.matrix().max_abs_diff(want.matrix()) < 1e-3);
    CHECK(ref.omega_d.x == doctest::Approx(0.5 * M_PI));
}

TEST_CASE("attitude task e steps every two seconds") {
    ReferenceProvider prov(TaskId::AttE, 1e-3);
    Reference ref;
    for (int i = 0; i < 1000; ++i) ref = prov.step();  // t = 1.0: first target
    const Vec3 e1 = ref.r_d.euler_zyx();
    CHECK(e1.x == doctest::Approx(M_PI / 2).epsilon(1e-9));
    for (int i = 0; i < 2000; ++i) ref = prov.step();  // t = 3.0: second target
    const Vec3 e2 = ref.r_d.euler_zyx();
    CHECK(e2.x == doctest::Approx(-M_PI / 2).epsilon(1e-9));
}

TEST_CASE("scheduler ratio is pinned") {
    CHECK(Simulation::kDt == doctest::Approx(1e-3));
    CHECK(Simulation::kControlDivider == 10);
}

TEST_CASE("scenario json parsing with gain overrides") {
    const std::string dir = std::string(FLAPSIM_CONFIG_DIR);
    const std::string text = R"({
      "robot": "robot_xwing.json",
      "task": "att-a",
      "controller": "tau3",
      "duration_s": 2.5,
      "wind_mps": [0.1, 0.2, 0.3],
      "seed": 7,
      "gains": {"k_r": 3.5, "k_ep": [9, 9, 9]}
    })";
    const std::string path = "/tmp/flapsim_test_scenario.json";
    {
        std::ofstream out(path);
        out << text;
    }
    // the robot path resolves relative to the scenario file, so place a copy
    const std::string path2 = dir + "/scenarios/unit_test_scenario.json";
    {
        std::ofstream out(path2);
        out << R"({"robot": "../robot_xwing.json", "task": "att-a", "controller": "tau3",
                   "duration_s": 2.5, "seed": 7, "gains": {"k_r": 3.5, "k_ep": [9,9,9]}})";
    }
    const Scenario sc = Scenario::from_json_file(path2);
    CHECK(sc.task == TaskId::AttA);
    CHECK(sc.controller == "tau3");
    CHECK(sc.duration == doctest::Approx(2.5));
    CHECK(sc.seed == 7);
    CHECK(sc.gains.k_r == doctest::Approx(3.5));
    CHECK(sc.gains.k_ep.x == doctest::Approx(9.0));
    std::remove(path.c_str());
    std::remove(path2.c_str());
}
