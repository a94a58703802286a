// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "airs/errors.hpp"

namespace airs {

/// 3-D position/direction in meters, double precision.
struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& r) const { return {x + r.x, y + r.y, z + r.z}; }
    constexpr Vec3 operator-(const Vec3& r) const { return {x - r.x, y - r.y, z - r.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

    constexpr double dot(const Vec3& r) const { return x * r.x + y * r.y + z * r.z; }
    constexpr double norm_sq() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_sq()); }

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline double distance(const Vec3& a, const Vec3& b) { return (b - a).norm(); }

/// Unit vector pointing from a to b. Throws DegenerateDirection when a == b.
inline Vec3 unit_vector(const Vec3& a, const Vec3& b) {
    const Vec3 d = b - a;
    const double n = d.norm();
    if (n == 0.0) {
        throw DegenerateDirection("unit_vector: coincident points");
    }
    return d * (1.0 / n);
}

} // namespace airs
