// SPDX-License-Identifier: Apache-2.0
#include "airs/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "airs/rng.hpp"

namespace airs {

IrsGrid::IrsGrid(int kx, int ky, double dx, double dy, double wavelength)
    : kx_(kx), ky_(ky), dx_(dx), dy_(dy), wavelength_(wavelength) {
    if (kx < 1 || ky < 1) {
        throw std::invalid_argument("IrsGrid: element counts must be >= 1");
    }
    if (!(wavelength > 0.0) || !(dx > 0.0) || !(dy > 0.0)) {
        throw std::invalid_argument("IrsGrid: wavelength and spacings must be positive");
    }
    if (!(dx < wavelength / 2.0) || !(dy < wavelength / 2.0)) {
        throw std::invalid_argument("IrsGrid: element spacing must be below lambda/2");
    }
}

IrsGrid IrsGrid::square(int k_per_axis, double wavelength, double spacing_denominator) {
    const double d = wavelength / spacing_denominator;
    return IrsGrid(k_per_axis, k_per_axis, d, d, wavelength);
}

double IrsGrid::dbar_x() const { return 2.0 * std::numbers::pi * dx_ / wavelength_; }
double IrsGrid::dbar_y() const { return 2.0 * std::numbers::pi * dy_ / wavelength_; }

SensorField place_sensors(const Vec3& center, double r, int m, std::uint64_t seed) {
    if (m < 1) {
        throw EmptyField("place_sensors: need at least one sensor");
    }
    if (r < 0.0) {
        throw std::invalid_argument("place_sensors: negative radius");
    }
    SensorField field;
    field.center = center;
    field.radius = r;
    field.positions.reserve(static_cast<std::size_t>(m));

    Rng rng(seed);
    for (int i = 0; i < m; ++i) {
        // sqrt(u) radius keeps the density uniform over the disk area
        const double rho = r * std::sqrt(rng.uniform());
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        field.positions.push_back(
            {center.x + rho * std::cos(phi), center.y + rho * std::sin(phi), 0.0});
    }
    return field;
}

std::vector<Vec3> irs_element_positions(const Vec3& q_ref, const IrsGrid& grid) {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(grid.size()));
    for (int ky = 1; ky <= grid.ky(); ++ky) {
        for (int kx = 1; kx <= grid.kx(); ++kx) {
            pts.push_back({q_ref.x + (kx - 1) * grid.dx(), q_ref.y + (ky - 1) * grid.dy(),
                           q_ref.z});
        }
    }
    return pts;
}

Lemma1Limits lemma1_limits(const IrsGrid& grid) {
    Lemma1Limits lim;
    lim.kx_max = static_cast<int>(std::floor(grid.zx()));
    lim.ky_max = static_cast<int>(std::floor(grid.zy()));
    lim.feasible = (grid.kx() <= grid.zx()) && (grid.ky() <= grid.zy());
    return lim;
}

} // namespace airs
