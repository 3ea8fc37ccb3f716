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

#include "flapsim/analysis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "flapsim/kernels.hpp"

namespace flapsim::analysis {

TimeSeries Vec3Series::component(int axis) const {
    TimeSeries out;
    out.t0 = t0;
    out.step = step;
    out.values.reserve(values.size());
    for (const Vec3& v : values) out.values.push_back(v[axis]);
    return out;
}

TimeSeries periodic_average(const TimeSeries& ts, double period) {
    if (!(ts.step > 0.0)) throw std::invalid_argument("periodic_average: step must be > 0");
    const auto w = static_cast<std::size_t>(std::llround(period / ts.step));
    if (w < 2) throw std::invalid_argument("periodic_average: period shorter than 2 samples");
    if (w > ts.size()) throw std::invalid_argument("periodic_average: series shorter than one period");
    TimeSeries out;
    out.t0 = ts.t0;
    out.step = ts.step;
    out.values.resize(ts.size() - w + 1);
    double acc = std::accumulate(ts.values.begin(), ts.values.begin() + w, 0.0);
    const double inv_w = 1.0 / static_cast<double>(w);
    out.values[0] = acc * inv_w;
    for (std::size_t k = 1; k < out.values.size(); ++k) {
        acc += ts.values[k + w - 1] - ts.values[k - 1];
        out.values[k] = acc * inv_w;
    }
    return out;
}

static void check_window(std::size_t i0, std::size_t i1, std::size_t n) {
    if (i0 >= i1 || i1 > n) throw std::invalid_argument("oscillation_statistic: empty window");
}

double oscillation_statistic(const TimeSeries& ts, std::size_t i0, std::size_t i1) {
    check_window(i0, i1, ts.size());
    const std::size_t n = i1 - i0;
    const double* v = ts.values.data() + i0;
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += v[i];
    mean /= static_cast<double>(n);
    const double sup = kernels::active().excursion(v, n, mean, ts.step);
    return std::sqrt(sup);
}

double oscillation_statistic(const Vec3Series& ts, std::size_t i0, std::size_t i1) {
    check_window(i0, i1, ts.size());
    const std::size_t n = i1 - i0;
    Vec3 mean;
    for (std::size_t i = 0; i < n; ++i) mean += ts.values[i0 + i];
    mean = mean / static_cast<double>(n);
    // prefix points of the mean-removed partial sums, origin included
    std::vector<double> px(n + 1), py(n + 1), pz(n + 1);
    px[0] = py[0] = pz[0] = 0.0;
    Vec3 acc;
    for (std::size_t i = 0; i < n; ++i) {
        acc += (ts.values[i0 + i] - mean) * ts.step;
        px[i + 1] = acc.x;
        py[i + 1] = acc.y;
        pz[i + 1] = acc.z;
    }
    const double sup = kernels::active().diameter(px.data(), py.data(), pz.data(), n + 1);
    return std::sqrt(sup);
}

double oscillation_statistic(const TimeSeries& ts) {
    return oscillation_statistic(ts, 0, ts.size());
}

double oscillation_statistic(const Vec3Series& ts) {
    return oscillation_statistic(ts, 0, ts.size());
}

SeriesMetrics metrics(const TimeSeries& ts, double window_start) {
    if (!(window_start >= 0.0 && window_start < 1.0))
        throw std::invalid_argument("metrics: window_start must be in [0, 1)");
    const auto begin = static_cast<std::size_t>(window_start * static_cast<double>(ts.size()));
    if (begin >= ts.size()) throw std::invalid_argument("metrics: empty series");
    SeriesMetrics out;
    double ss = 0.0;
    for (std::size_t i = begin; i < ts.size(); ++i) {
        const double v = ts.values[i];
        out.max = std::max(out.max, std::fabs(v));
        ss += v * v;
    }
    out.rms = std::sqrt(ss / static_cast<double>(ts.size() - begin));
    return out;
}

SeriesMetrics metrics_windows(const TimeSeries& ts,
                              const std::vector<std::pair<std::size_t, std::size_t>>& windows) {
    SeriesMetrics out;
    double ss = 0.0;
    std::size_t count = 0;
    for (const auto& [a, b] : windows) {
        for (std::size_t i = a; i < b && i < ts.size(); ++i) {
            const double v = ts.values[i];
            out.max = std::max(out.max, std::fabs(v));
            ss += v * v;
            ++count;
        }
    }
    if (count == 0) throw std::invalid_argument("metrics_windows: no samples selected");
    out.rms = std::sqrt(ss / static_cast<double>(count));
    return out;
}

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

LineFit line_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("line_fit: need at least 2 points");
    const double n = static_cast<double>(x.size());
    const double mx = mean(x), my = mean(y);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    (void)n;
    return fit;
}

}  // namespace flapsim::analysis
