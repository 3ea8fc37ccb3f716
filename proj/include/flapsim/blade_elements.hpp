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

#ifndef FLAPSIM_BLADE_ELEMENTS_HPP
#define FLAPSIM_BLADE_ELEMENTS_HPP

#include <string>
#include <vector>

namespace flapsim::geom {

// One spanwise wing strip.
struct BladeElement {
    double r = 0.0;          // spanwise station, m from the hinge root (strip midpoint)
    double chord = 0.0;      // m
    double dr = 0.0;         // strip width, m
    double le_offset = 0.0;  // chordwise offset of the leading edge from the pitch axis, m
};

// 2-D vertex cloud of a wing panel: (spanwise, chordwise) pairs in meters.
struct WingOutline {
    std::vector<double> span;
    std::vector<double> chordwise;

    std::size_t size() const { return span.size(); }
};

// Reads x,y[,z] rows; x = spanwise, y = chordwise, z ignored. '#' comments and
// a non-numeric header row are skipped.
WingOutline load_outline_csv(const std::string& path);

// Polynomial chord function c(r), highest degree last.
struct ChordFit {
    std::vector<double> coeffs;  // c(r) = sum coeffs[k] * r^k
    double residual_rms = 0.0;   // RMS residual of the fit at the chord stations, m
    double span_min = 0.0;
    double span_max = 0.0;

    double operator()(double r) const;
};

// Least-squares polynomial fit of the per-station chord (max minus min
// chordwise coordinate in each spanwise bin).
// Throws std::invalid_argument on degree < 1, fewer than 4 points, or a
// degenerate (zero-span) outline.
ChordFit fit_edge(const WingOutline& outline, int degree);

// n equal-width strips over [0, span], chord sampled at strip midpoints.
// Throws std::invalid_argument on n < 1 or span <= 0.
std::vector<BladeElement> build_blade_elements(const ChordFit& chord, double span, int n);

// Constant-chord strips (tails and tests).
std::vector<BladeElement> uniform_blade_elements(double chord, double span, int n);

// {"span": ..., "elements": [{"r":..,"c":..,"dr":..}, ...]}
std::string elements_to_json(const std::vector<BladeElement>& elems, double span);

}  // namespace flapsim::geom

#endif  // FLAPSIM_BLADE_ELEMENTS_HPP
