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

#include <doctest.h>

#include "flapsim/wake.hpp"

using namespace flapsim;
using namespace flapsim::wake;

TEST_CASE("phase delay") {
    CHECK(phase_delay(0.0, 0.1) == 0.0);
    CHECK(phase_delay(0.1, 0.1) == doctest::Approx(2.0 * M_PI));
    // 75.6 ms against a 15 Hz period is about 2.268 pi
    const double phi = phase_delay(0.0756, 1.0 / 15.0);
    CHECK(phi / M_PI == doctest::Approx(2.268).epsilon(1e-3));
    CHECK_THROWS_AS(phase_delay(0.1, 0.0), std::invalid_argument);
}

TEST_CASE("push ordering and truncation") {
    WakeBuffer buf(0.15);
    CHECK(buf.empty());
    buf.push(0.0, {0, 0, 1});
    CHECK(buf.size() == 1);
    CHECK_THROWS_AS(buf.push(0.0, {0, 0, 1}), std::invalid_argument);

    // 1500 samples at 1 ms leave the newest 1000
    WakeBuffer big(0.15);
    for (int i = 0; i < 1500; ++i) big.push(i * 1e-3, {0, 0, 1});
    CHECK(big.size() == 1000);
    CHECK(big.span() <= 1.0 + 1e-12);
}

TEST_CASE("constant field: the delayed sample is the field") {
    WakeBuffer buf(0.15);
    for (int i = 0; i < 2000; ++i) buf.push(i * 1e-3, {0, 0, -1.0});
    // mean speed 1 m/s -> delay 0.15 s, well inside the record
    CHECK(buf.travel_delay(1.0 / 15.0) == doctest::Approx(0.15));
    const Vec3 s = buf.sample_delayed(2.0, 1.0 / 15.0);
    CHECK(s.z == doctest::Approx(-1.0));
}

TEST_CASE("delay beyond the record returns zero") {
    WakeBuffer buf(0.15);
    // crawling wake: 0.1 m/s -> delay 1.5 s > 1.0 s span
    for (int i = 0; i < 2000; ++i) buf.push(i * 1e-3, {0, 0, -0.1});
    CHECK(buf.travel_delay(1.0 / 15.0) == doctest::Approx(1.5));
    CHECK(buf.sample_delayed(2.0, 1.0 / 15.0).norm() == 0.0);
}

TEST_CASE("empty or silent buffer yields zero") {
    WakeBuffer buf(0.15);
    CHECK(buf.sample_delayed(1.0, 0.1).norm() == 0.0);
    for (int i = 0; i < 100; ++i) buf.push(i * 1e-3, {0, 0, 0});
    CHECK(std::isinf(buf.travel_delay(0.05)));
    CHECK(buf.sample_delayed(0.1, 0.05).norm() == 0.0);
}

TEST_CASE("delayed sample picks the nearest record") {
    WakeBuffer buf(0.15);
    // ramp field at 1.5 m/s mean speed over the averaging window
    for (int i = 0; i < 1000; ++i) {
        const double t = i * 1e-3;
        buf.push(t, {0, 0, -1.5});
    }
    // overwrite intuition: inject a marker by continuing the ramp
    buf.push(1.0, {42.0, 0, -1.5});
    for (int i = 1; i < 200; ++i) buf.push(1.0 + i * 1e-3, {0, 0, -1.5});
    // delay = 0.15 / 1.5 = 0.1 s; querying at 1.1 lands on the marker
    const Vec3 s = buf.sample_delayed(1.1, 1.0 / 15.0);
    CHECK(s.x == doctest::Approx(42.0));
}
