// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "airs/geometry.hpp"
#include "airs/vec3.hpp"

namespace airs {

/// Coefficients of the per-step cubic eps^3 - b eps^2 + c eps + d = 0 in the
/// normalized UAV norm eps = ||q|| / ||Omega_A||, plus the recorded discriminant.
struct CubicCoeffs {
    double b{0.0};
    double c{0.0};
    double d{0.0};
    double delta{0.0}; ///< (bc)^2 + 18bcd - 4c^3 - 4b^3 d - 27d^2, bookkeeping only
};

/// Candidate circle of UAV positions: ||q|| = epsilon*||Omega_A|| at altitude H,
/// i.e. q_x^2 + q_y^2 = radius^2 centered at the origin of the z = H plane.
struct RingCandidate {
    double epsilon{0.0};
    double radius{0.0};
};

/// How a step was produced (reported in the trajectory CSV).
enum class StepKind { RingPoint, StayOnRing, WalkTowardRing, LocalSearch, Hover };

struct StepInfo {
    StepKind kind{StepKind::Hover};
    double epsilon{0.0};     ///< epsilon of the selected/targeted ring (0 if none)
    double ring_radius{0.0}; ///< its radius (0 if none)
    double displacement{0.0};
};

/// Objective used to score candidate positions: the instantaneous raw secrecy
/// rate at mean fading. Owned by the caller; this module never sees Eve.
using StepObjective = std::function<double(const Vec3&)>;

struct PlannerOptions {
    int ring_angles{360};    ///< uniformly spaced candidate angles per ring
    int fallback_dirs{24};   ///< compass directions for the no-reachable-ring search
    double on_ring_tol{1e-6}; ///< meters; q_prev counts as on-ring within this
};

/// b, c, d from the geometry of the previous position; throws DegenerateGeometry
/// when the field center sits at the origin.
CubicCoeffs cubic_coefficients(const Vec3& omega_a, const Vec3& omega_b, const Vec3& q_prev,
                               double speed, double dt);

/// All real roots of eps^3 - b eps^2 + c eps + d = 0, Newton-polished,
/// ascending. A cubic always yields at least one.
std::vector<double> solve_epsilon(const CubicCoeffs& coeffs);

/// Ring for one epsilon, or nothing when (eps*||Omega_A||)^2 < H^2.
std::optional<RingCandidate> candidate_ring(double epsilon, const Vec3& omega_a, double altitude);

/// One planning step.
///
/// Reachable discretized ring points (plus q_prev when it lies on a ring) are
/// scored by the objective and the best wins; ties keep q_prev first, then the
/// smallest ring/angle index. When no ring point is reachable the step is
/// chosen the same way over {stay, full- and half-speed compass steps, the
/// full-speed step toward the nearest feasible ring}. With no feasible ring at
/// all the UAV hovers.
Vec3 next_position(const Vec3& q_prev, const std::vector<RingCandidate>& rings,
                   double speed_limit, const StepObjective& objective,
                   const PlannerOptions& options = {}, StepInfo* info = nullptr);

struct PlannedTrajectory {
    std::vector<Vec3> points;   ///< q[1..N]
    std::vector<StepInfo> steps; ///< one per point
    Vec3 start;                  ///< q_o
};

/// Full flight: per step cubic -> roots -> rings -> next_position. The speed
/// constraint and constant altitude hold at every step by construction.
PlannedTrajectory plan_trajectory(const FlightPlan& plan, const Vec3& omega_a,
                                  const Vec3& omega_b, const StepObjective& objective,
                                  const PlannerOptions& options = {});

} // namespace airs
