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

#ifndef FLAPSIM_WAKE_HPP
#define FLAPSIM_WAKE_HPP

#include <cstddef>
#include <vector>

#include "flapsim/vec3.hpp"

namespace flapsim::wake {

// Phi_d = 2 pi T_d / T_fp
double phase_delay(double delay_s, double flap_period_s);

// Time-stamped record of wing induced-velocity samples, truncated to the most
// recent 1000 ms. The tail inflow is the sample one wake-travel delay old,
// where the travel speed is the mean |u_i| over the latest flapping period.
class WakeBuffer {
  public:
    // wing_tail_distance: trailing edge to tail, m.
    explicit WakeBuffer(double wing_tail_distance);

    static constexpr double kRecordLength = 1.0;  // s

    // t must exceed the last pushed timestamp; throws std::invalid_argument
    // otherwise. Samples older than 1000 ms are evicted.
    void push(double t, const Vec3& u_i);

    // Buffered sample nearest to (t_now - delay). Zero when the buffer is
    // empty or the delay exceeds the record span.
    Vec3 sample_delayed(double t_now, double flap_period_s) const;

    // d_wt / mean(|u_i|) over the most recent flap_period_s window.
    // Infinite when the window mean is zero.
    double travel_delay(double flap_period_s) const;

    std::size_t size() const { return times_.size() - head_; }
    bool empty() const { return size() == 0; }
    double span() const;
    double wing_tail_distance() const { return d_wt_; }

  private:
    double mean_speed(double window_s) const;

    double d_wt_;
    std::vector<double> times_;    // strictly increasing
    std::vector<Vec3> samples_;
    std::size_t head_ = 0;         // index of the oldest live sample
};

}  // namespace flapsim::wake

#endif  // FLAPSIM_WAKE_HPP
