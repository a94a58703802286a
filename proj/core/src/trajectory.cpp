// SPDX-License-Identifier: Apache-2.0
#include "airs/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "airs/errors.hpp"

namespace airs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cubic_eval(const CubicCoeffs& c, double eps) {
    return ((eps - c.b) * eps + c.c) * eps + c.d;
}

double cubic_deriv(const CubicCoeffs& c, double eps) {
    return (3.0 * eps - 2.0 * c.b) * eps + c.c;
}

double newton_polish(const CubicCoeffs& c, double eps) {
    for (int it = 0; it < 4; ++it) {
        const double f = cubic_eval(c, eps);
        const double df = cubic_deriv(c, eps);
        if (df == 0.0) {
            break;
        }
        const double step = f / df;
        eps -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(eps))) {
            break;
        }
    }
    return eps;
}

struct Candidate {
    Vec3 pos;
    double epsilon;
    double radius;
    StepKind kind;
};

} // namespace

CubicCoeffs cubic_coefficients(const Vec3& omega_a, const Vec3& omega_b, const Vec3& q_prev,
                               double speed, double dt) {
    const double na = omega_a.norm();
    if (na == 0.0) {
        throw DegenerateGeometry("cubic_coefficients: field center at the origin");
    }
    const double nb = omega_b.norm();
    const double nq = q_prev.norm();
    const double step = speed * dt;

    CubicCoeffs c;
    c.b = nb / (2.0 * na) + 2.0 * nq / na + 0.5;
    c.c = (nb * nq + nq * nq) / (na * na) - nq / na;
    c.d = (nb / (2.0 * na)) * (nq * nq) / (na * na) + (nq * nq) / (2.0 * na * na) -
          (step * step) / (2.0 * na * na);
    const double bc = c.b * c.c;
    c.delta = bc * bc + 18.0 * c.b * c.c * c.d - 4.0 * c.c * c.c * c.c -
              4.0 * c.b * c.b * c.b * c.d - 27.0 * c.d * c.d;
    return c;
}

std::vector<double> solve_epsilon(const CubicCoeffs& coeffs) {
    // Depressed form: eps = t + b/3, t^3 + p t + q = 0.
    const double b = coeffs.b;
    const double p = coeffs.c - b * b / 3.0;
    const double q = -2.0 * b * b * b / 27.0 + b * coeffs.c / 3.0 + coeffs.d;

    std::vector<double> roots;
    const double shift = b / 3.0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;
    const double scale = std::max({1.0, std::abs(p), std::abs(q)});

    if (std::abs(p) <= 1e-14 * scale && std::abs(q) <= 1e-14 * scale) {
        roots.push_back(shift); // triple root
    } else if (disc > 1e-14 * scale * scale) {
        // one real root (Cardano)
        const double s = std::sqrt(disc);
        roots.push_back(std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s) + shift);
    } else if (disc < -1e-14 * scale * scale) {
        // three distinct real roots (trigonometric form; p < 0 here)
        const double r = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
        const double phi = std::acos(arg);
        for (int k = 0; k < 3; ++k) {
            roots.push_back(r * std::cos((phi - kTwoPi * k) / 3.0) + shift);
        }
    } else {
        // borderline: repeated roots
        const double t1 = 3.0 * q / p;
        const double t2 = -3.0 * q / (2.0 * p);
        roots.push_back(t1 + shift);
        roots.push_back(t2 + shift);
    }

    for (double& r : roots) {
        r = newton_polish(coeffs, r);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double c) { return std::abs(a - c) <= 1e-9; }),
                roots.end());
    return roots;
}

std::optional<RingCandidate> candidate_ring(double epsilon, const Vec3& omega_a,
                                            double altitude) {
    if (!(epsilon > 0.0)) {
        return std::nullopt;
    }
    const double rho = epsilon * omega_a.norm();
    const double radicand = rho * rho - altitude * altitude;
    if (radicand < 0.0) {
        return std::nullopt;
    }
    return RingCandidate{epsilon, std::sqrt(radicand)};
}

Vec3 next_position(const Vec3& q_prev, const std::vector<RingCandidate>& rings,
                   double speed_limit, const StepObjective& objective,
                   const PlannerOptions& options, StepInfo* info) {
    std::vector<Candidate> candidates;
    const double prev_xy = std::hypot(q_prev.x, q_prev.y);

    // q_prev first so a flat objective keeps it (zero-displacement tie-break)
    for (const RingCandidate& ring : rings) {
        if (std::abs(prev_xy - ring.radius) <= options.on_ring_tol) {
            candidates.push_back({q_prev, ring.epsilon, ring.radius, StepKind::StayOnRing});
            break;
        }
    }
    for (const RingCandidate& ring : rings) {
        for (int a = 0; a < options.ring_angles; ++a) {
            const double phi = kTwoPi * a / options.ring_angles;
            const Vec3 p{ring.radius * std::cos(phi), ring.radius * std::sin(phi), q_prev.z};
            if (distance(q_prev, p) <= speed_limit + 1e-12) {
                candidates.push_back({p, ring.epsilon, ring.radius, StepKind::RingPoint});
            }
        }
    }

    if (candidates.empty()) {
        if (rings.empty()) {
            if (info) {
                *info = {StepKind::Hover, 0.0, 0.0, 0.0};
            }
            return q_prev;
        }
        // No ring point is reachable this step. Choose among staying put, short
        // compass moves, and the full-speed move toward the nearest ring, scored
        // by the same objective (see next_position contract).
        const RingCandidate* nearest = &rings.front();
        double best_gap = std::abs(prev_xy - nearest->radius);
        for (const RingCandidate& ring : rings) {
            const double gap = std::abs(prev_xy - ring.radius);
            if (gap < best_gap) {
                best_gap = gap;
                nearest = &ring;
            }
        }
        candidates.push_back({q_prev, nearest->epsilon, nearest->radius, StepKind::Hover});
        if (speed_limit > 0.0) {
            for (int j = 0; j < options.fallback_dirs; ++j) {
                const double phi = kTwoPi * j / options.fallback_dirs;
                const Vec3 dir{std::cos(phi), std::sin(phi), 0.0};
                candidates.push_back({q_prev + speed_limit * dir, nearest->epsilon,
                                      nearest->radius, StepKind::LocalSearch});
                candidates.push_back({q_prev + 0.5 * speed_limit * dir, nearest->epsilon,
                                      nearest->radius, StepKind::LocalSearch});
            }
            // radial step toward the nearest point of the nearest ring
            Vec3 target;
            if (prev_xy > 0.0) {
                const double s = nearest->radius / prev_xy;
                target = {q_prev.x * s, q_prev.y * s, q_prev.z};
            } else {
                target = {nearest->radius, 0.0, q_prev.z};
            }
            const double d = distance(q_prev, target);
            if (d > 0.0) {
                const Vec3 step = q_prev + (speed_limit / d) * (target - q_prev);
                candidates.push_back(
                    {step, nearest->epsilon, nearest->radius, StepKind::WalkTowardRing});
            }
        }
    }

    const Candidate* best = &candidates.front();
    double best_score = objective(best->pos);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const double score = objective(candidates[i].pos);
        if (score > best_score) {
            best_score = score;
            best = &candidates[i];
        }
    }
    if (info) {
        *info = {best->kind, best->epsilon, best->radius, distance(q_prev, best->pos)};
    }
    return best->pos;
}

PlannedTrajectory plan_trajectory(const FlightPlan& plan, const Vec3& omega_a,
                                  const Vec3& omega_b, const StepObjective& objective,
                                  const PlannerOptions& options) {
    PlannedTrajectory out;
    out.start = plan.start;
    out.points.reserve(static_cast<std::size_t>(plan.samples));
    out.steps.reserve(static_cast<std::size_t>(plan.samples));

    Vec3 q = plan.start;
    for (int n = 0; n < plan.samples; ++n) {
        const CubicCoeffs coeffs = cubic_coefficients(omega_a, omega_b, q, plan.speed, plan.dt);
        std::vector<RingCandidate> rings;
        for (double eps : solve_epsilon(coeffs)) {
            if (auto ring = candidate_ring(eps, omega_a, plan.altitude)) {
                rings.push_back(*ring);
            }
        }
        StepInfo info;
        q = next_position(q, rings, plan.step_budget(), objective, options, &info);
        out.points.push_back(q);
        out.steps.push_back(info);
    }
    return out;
}

} // namespace airs
