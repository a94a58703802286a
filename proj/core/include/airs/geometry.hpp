// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "airs/vec3.hpp"

namespace airs {

/// Cluster of ground sensors ("Alice"): M nodes inside a disk of radius r at z = 0.
struct SensorField {
    Vec3 center;
    double radius{0.0};
    std::vector<Vec3> positions;

    int count() const { return static_cast<int>(positions.size()); }
};

/// Reflecting-surface element lattice carried by the UAV.
///
/// Elements are indexed (kx, ky), 1-based, kx running fastest; the first
/// element (1,1) is the reference and coincides with the UAV position.
/// Spacings must be strictly below half a wavelength.
class IrsGrid {
  public:
    IrsGrid(int kx, int ky, double dx, double dy, double wavelength);

    /// Square grid with dx = dy = wavelength / denom (denom > 2).
    static IrsGrid square(int k_per_axis, double wavelength, double spacing_denominator = 4.0);

    int kx() const { return kx_; }
    int ky() const { return ky_; }
    int size() const { return kx_ * ky_; }
    double dx() const { return dx_; }
    double dy() const { return dy_; }
    double wavelength() const { return wavelength_; }

    /// Normalized spacings: dbar = 2*pi*d/lambda.
    double dbar_x() const;
    double dbar_y() const;

    /// Wavelength fractions z = lambda/d (> 2 by construction).
    double zx() const { return wavelength_ / dx_; }
    double zy() const { return wavelength_ / dy_; }

    /// Flat element index (0-based) for 1-based lattice coordinates.
    int flat_index(int kx_idx, int ky_idx) const { return (ky_idx - 1) * kx_ + (kx_idx - 1); }

  private:
    int kx_;
    int ky_;
    double dx_;
    double dy_;
    double wavelength_;
};

/// Sampled flight: N slots of duration dt, constant altitude, speed cap.
struct FlightPlan {
    double total_time{0.0};
    int samples{0};
    double dt{0.0};
    double speed{0.0};
    double altitude{0.0};
    Vec3 start;

    double step_budget() const { return speed * dt; }
};

/// Draw m sensors uniformly over the closed disk of radius r around center (z = 0).
/// Identical seeds give identical fields; r = 0 collapses everything to the center.
SensorField place_sensors(const Vec3& center, double r, int m, std::uint64_t seed);

/// Positions of all K elements for a grid whose reference element sits at q_ref.
std::vector<Vec3> irs_element_positions(const Vec3& q_ref, const IrsGrid& grid);

struct Lemma1Limits {
    int kx_max{0};
    int ky_max{0};
    bool feasible{false};
};

/// Maximum per-axis element counts keeping the plate within one wavelength,
/// and whether the given grid respects them. Validator only: infeasible grids
/// are allowed to run (sweeps deliberately exceed the bound).
Lemma1Limits lemma1_limits(const IrsGrid& grid);

} // namespace airs
