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

#ifndef FLAPSIM_ANALYSIS_HPP
#define FLAPSIM_ANALYSIS_HPP

#include <cstddef>
#include <vector>

#include "flapsim/vec3.hpp"

namespace flapsim::analysis {

// Uniformly sampled scalar series; step > 0.
struct TimeSeries {
    double t0 = 0.0;
    double step = 0.0;  // the paper's l
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double time_at(std::size_t i) const { return t0 + step * static_cast<double>(i); }
};

struct Vec3Series {
    double t0 = 0.0;
    double step = 0.0;
    std::vector<Vec3> values;

    std::size_t size() const { return values.size(); }
    TimeSeries component(int axis) const;
};

// Sliding one-period mean. Output sample k is the mean of samples
// [k, k+w) where w = round(period/step); output has size()-w+1 samples.
// Throws std::invalid_argument if the window is shorter than 2 samples or
// longer than the series.
TimeSeries periodic_average(const TimeSeries& ts, double period);

// Oscillation statistic: sqrt of the largest |windowed sum of (f - fbar) * l|
// over all contiguous windows inside [i0, i1) sample indices.
// Scalar series use the prefix-sum max-minus-min reduction; Vec3 series take
// the norm of the vector partial sum (max pairwise prefix distance).
double oscillation_statistic(const TimeSeries& ts, std::size_t i0, std::size_t i1);
double oscillation_statistic(const Vec3Series& ts, std::size_t i0, std::size_t i1);

// Convenience over the full series.
double oscillation_statistic(const TimeSeries& ts);
double oscillation_statistic(const Vec3Series& ts);

struct SeriesMetrics {
    double max = 0.0;
    double rms = 0.0;
};

// MAX and RMS over the steady-state window starting at fraction
// window_start (0 <= window_start < 1) of the series.
// Throws std::invalid_argument on an empty window.
SeriesMetrics metrics(const TimeSeries& ts, double window_start = 0.2);

// MAX/RMS over an explicit list of sample windows (used for step tasks where
// the steady state is the tail of each hold segment).
SeriesMetrics metrics_windows(const TimeSeries& ts,
                              const std::vector<std::pair<std::size_t, std::size_t>>& windows);

double mean(const std::vector<double>& v);

// Least-squares line fit y = a + b x; returns {a, b, r_squared}.
struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
    double r_squared = 0.0;
};
LineFit line_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace flapsim::analysis

#endif  // FLAPSIM_ANALYSIS_HPP
