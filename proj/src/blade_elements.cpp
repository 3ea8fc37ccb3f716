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

#include "flapsim/blade_elements.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace flapsim::geom {

WingOutline load_outline_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open outline CSV: " + path);
    WingOutline out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double x, y;
        if (ss >> x >> y) {
            out.span.push_back(x);
            out.chordwise.push_back(y);
        }
        // non-numeric rows (headers) fall through silently
    }
    return out;
}

double ChordFit::operator()(double r) const {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * r + coeffs[k];
    return acc;
}

// Solves the (degree+1)x(degree+1) normal equations by Gaussian elimination
// with partial pivoting.
static std::vector<double> polyfit(const std::vector<double>& x, const std::vector<double>& y,
                                   int degree) {
    const int m = degree + 1;
    std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0);
    std::vector<double> b(m, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<double> powers(m);
        powers[0] = 1.0;
        for (int k = 1; k < m; ++k) powers[k] = powers[k - 1] * x[i];
        for (int r = 0; r < m; ++r) {
            b[r] += powers[r] * y[i];
            for (int c = 0; c < m; ++c) a[r * m + c] += powers[r] * powers[c];
        }
    }
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(a[r * m + col]) > std::fabs(a[piv * m + col])) piv = r;
        if (std::fabs(a[piv * m + col]) < 1e-300)
            throw std::invalid_argument("fit_edge: rank-deficient fit (too few chord stations)");
        if (piv != col) {
            for (int c = 0; c < m; ++c) std::swap(a[piv * m + c], a[col * m + c]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < m; ++r) {
            const double f = a[r * m + col] / a[col * m + col];
            for (int c = col; c < m; ++c) a[r * m + c] -= f * a[col * m + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> coef(m);
    for (int r = m - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < m; ++c) acc -= a[r * m + c] * coef[c];
        coef[r] = acc / a[r * m + r];
    }
    return coef;
}

ChordFit fit_edge(const WingOutline& outline, int degree) {
    if (degree < 1) throw std::invalid_argument("fit_edge: degree must be >= 1");
    if (outline.size() < 4) throw std::invalid_argument("fit_edge: need at least 4 outline points");

    const auto [mn_it, mx_it] = std::minmax_element(outline.span.begin(), outline.span.end());
    const double r0 = *mn_it, r1 = *mx_it;
    if (!(r1 - r0 > 0.0)) throw std::invalid_argument("fit_edge: outline has zero spanwise extent");

    // Per-station chord from spanwise bins: chord = max - min chordwise value.
    const int n_bins = static_cast<int>(std::clamp<std::size_t>(outline.size() / 4, 4, 160));
    const double bin_w = (r1 - r0) / n_bins;
    struct Bin {
        double lo = 0.0, hi = 0.0;
        int count = 0;
    };
    std::vector<Bin> bins(n_bins);
    for (std::size_t i = 0; i < outline.size(); ++i) {
        int k = static_cast<int>((outline.span[i] - r0) / bin_w);
        k = std::clamp(k, 0, n_bins - 1);
        Bin& bn = bins[k];
        const double c = outline.chordwise[i];
        if (bn.count == 0) {
            bn.lo = bn.hi = c;
        } else {
            bn.lo = std::min(bn.lo, c);
            bn.hi = std::max(bn.hi, c);
        }
        ++bn.count;
    }
    std::vector<double> stations, chords;
    for (int k = 0; k < n_bins; ++k) {
        if (bins[k].count >= 2) {
            stations.push_back(r0 + (k + 0.5) * bin_w);
            chords.push_back(bins[k].hi - bins[k].lo);
        }
    }
    if (stations.size() < 2) throw std::invalid_argument("fit_edge: too few populated chord stations");

    // Degree cannot exceed the information in the stations.
    const int eff_degree = std::min<int>(degree, static_cast<int>(stations.size()) - 1);

    ChordFit fit;
    fit.coeffs = polyfit(stations, chords, eff_degree);
    fit.span_min = r0;
    fit.span_max = r1;
    double ss = 0.0;
    for (std::size_t i = 0; i < stations.size(); ++i) {
        const double e = fit(stations[i]) - chords[i];
        ss += e * e;
    }
    fit.residual_rms = std::sqrt(ss / static_cast<double>(stations.size()));
    return fit;
}

std::vector<BladeElement> build_blade_elements(const ChordFit& chord, double span, int n) {
    if (n < 1) throw std::invalid_argument("build_blade_elements: n must be >= 1");
    if (!(span > 0.0)) throw std::invalid_argument("build_blade_elements: span must be > 0");
    const double dr = span / n;
    std::vector<BladeElement> elems(n);
    for (int i = 0; i < n; ++i) {
        elems[i].r = (i + 0.5) * dr;
        elems[i].dr = dr;
        elems[i].chord = std::max(chord(elems[i].r), 1e-6);
    }
    return elems;
}

std::vector<BladeElement> uniform_blade_elements(double chord, double span, int n) {
    if (n < 1) throw std::invalid_argument("uniform_blade_elements: n must be >= 1");
    if (!(span > 0.0 && chord > 0.0))
        throw std::invalid_argument("uniform_blade_elements: span and chord must be > 0");
    const double dr = span / n;
    std::vector<BladeElement> elems(n);
    for (int i = 0; i < n; ++i) {
        elems[i].r = (i + 0.5) * dr;
        elems[i].dr = dr;
        elems[i].chord = chord;
    }
    return elems;
}

std::string elements_to_json(const std::vector<BladeElement>& elems, double span) {
    std::ostringstream os;
    os.precision(12);
    os << "{\n  \"span\": " << span << ",\n  \"elements\": [\n";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        os << "    {\"r\": " << elems[i].r << ", \"c\": " << elems[i].chord
           << ", \"dr\": " << elems[i].dr << "}";
        os << (i + 1 < elems.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

}  // namespace flapsim::geom
