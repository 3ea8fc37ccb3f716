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

#ifndef FLAPSIM_VEC3_HPP
#define FLAPSIM_VEC3_HPP

#include <cmath>

namespace flapsim {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    constexpr double norm_sq() const { return x * x + y * y + z * z; }

    // Returns zero vector when the norm is below eps.
    Vec3 normalized(double eps = 0.0) const {
        const double n = norm();
        if (n <= eps) return {0.0, 0.0, 0.0};
        return {x / n, y / n, z / n};
    }

    bool is_finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double clamp(double v, double lo, double hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

inline double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// sgn applied per component (returns +/-1, 0 at exactly zero).
inline Vec3 sgn(const Vec3& v) { return {sign(v.x), sign(v.y), sign(v.z)}; }

// Component-wise sgn(v_i)*|v_i|^p (the fractional-power correction used by the
// observer and the sliding-mode laws).
inline Vec3 sig_pow(const Vec3& v, double p) {
    return {sign(v.x) * std::pow(std::fabs(v.x), p),
            sign(v.y) * std::pow(std::fabs(v.y), p),
            sign(v.z) * std::pow(std::fabs(v.z), p)};
}

inline Vec3 tanh3(const Vec3& v) {
    return {std::tanh(v.x), std::tanh(v.y), std::tanh(v.z)};
}

}  // namespace flapsim

#endif  // FLAPSIM_VEC3_HPP
