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

#include "flapsim/wake.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace flapsim::wake {

double phase_delay(double delay_s, double flap_period_s) {
    if (!(flap_period_s > 0.0)) throw std::invalid_argument("phase_delay: period must be > 0");
    return 2.0 * M_PI * delay_s / flap_period_s;
}

WakeBuffer::WakeBuffer(double wing_tail_distance) : d_wt_(wing_tail_distance) {
    if (!(wing_tail_distance > 0.0))
        throw std::invalid_argument("WakeBuffer: wing-tail distance must be > 0");
}

void WakeBuffer::push(double t, const Vec3& u_i) {
    if (!times_.empty() && !(t > times_.back()))
        throw std::invalid_argument("WakeBuffer::push: timestamps must be strictly increasing");
    times_.push_back(t);
    samples_.push_back(u_i);
    while (head_ < times_.size() && times_[head_] <= t - kRecordLength) ++head_;
    // compact occasionally so the arrays stay bounded
    if (head_ > 4096) {
        times_.erase(times_.begin(), times_.begin() + static_cast<std::ptrdiff_t>(head_));
        samples_.erase(samples_.begin(), samples_.begin() + static_cast<std::ptrdiff_t>(head_));
        head_ = 0;
    }
}

double WakeBuffer::span() const {
    if (size() < 2) return 0.0;
    return times_.back() - times_[head_];
}

double WakeBuffer::mean_speed(double window_s) const {
    if (times_.empty()) return 0.0;
    const double t_from = times_.back() - window_s;
    double acc = 0.0;
    std::size_t count = 0;
    for (std::size_t i = times_.size(); i-- > head_;) {
        if (times_[i] < t_from) break;
        acc += samples_[i].norm();
        ++count;
    }
    return count > 0 ? acc / static_cast<double>(count) : 0.0;
}

double WakeBuffer::travel_delay(double flap_period_s) const {
    const double v = mean_speed(flap_period_s);
    if (v <= 0.0) return std::numeric_limits<double>::infinity();
    return d_wt_ / v;
}

Vec3 WakeBuffer::sample_delayed(double t_now, double flap_period_s) const {
    if (times_.empty()) return {};
    const double delay = travel_delay(flap_period_s);
    if (!(delay <= span())) return {};  // too old to matter, or no speed at all
    const double t_query = t_now - delay;
    const auto it = std::lower_bound(times_.begin() + static_cast<std::ptrdiff_t>(head_),
                                     times_.end(), t_query);
    std::size_t idx;
    if (it == times_.end()) {
        idx = times_.size() - 1;
    } else {
        idx = static_cast<std::size_t>(it - times_.begin());
        if (idx > head_ && t_query - times_[idx - 1] < times_[idx] - t_query) --idx;
    }
    return samples_[idx];
}

}  // namespace flapsim::wake
