// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "airs/beamform.hpp"
#include "airs/bounds.hpp"
#include "airs/channel.hpp"
#include "airs/geometry.hpp"
#include "airs/trajectory.hpp"

namespace airs {

/// Nominal radio propagation speed used to derive the carrier wavelength.
inline constexpr double kSpeedOfLight = 3.0e8;

enum class Scheme { One, Two, FixedIrs };

/// Full scenario description. dB-valued inputs keep their dB form for
/// manifests and are converted once (linear = 10^(dB/10)) into the linear
/// fields the pipeline uses.
struct ScenarioConfig {
    int m_sensors{4};
    double field_radius{1.0};
    Vec3 omega_a{0.0, -100.0, 0.0};
    Vec3 omega_b{80.0, 100.0, 0.0};
    Vec3 omega_e{-100.0, 50.0, 0.0};
    Vec3 omega_fix_irs{80.0, 100.0, 0.0};
    Vec3 q_start{-100.0, 100.0, 100.0};
    double altitude{100.0};
    double total_time{300.0};
    double speed{3.0};
    double dt{0.5};
    double carrier_hz{900.0e6};
    int kx{4};
    int ky{4};
    double dx{0.0}; ///< 0 = default lambda/4, resolved by finalize_config
    double dy{0.0};
    double sigma_b2_dbm{30.0};
    double sigma_e2_dbm{30.0};
    double rho0_db{120.0};
    double power_dbm{1.0};
    Scheme scheme{Scheme::Two};
    std::uint64_t seed{1};
    int trials{200};
    bool share_eve_fading{false};
    int planner_objective{-1}; ///< PlannerObjectiveKind override; -1 = default


    // linear values, filled by finalize_config
    double sigma_b2{0.0};
    double sigma_e2{0.0};
    double rho0{0.0};
    double power{0.0};

    double wavelength() const { return kSpeedOfLight / carrier_hz; }
    int n_samples() const;
    IrsGrid grid() const { return IrsGrid(kx, ky, dx, dy, wavelength()); }
    FlightPlan flight_plan() const;
};

struct SampleRecord {
    double gamma_b{0.0};
    double gamma_e{0.0};
    double rate_raw{0.0};
    double rate_clamped{0.0};
    double gamma_b_ub{0.0};
    double gamma_e_ub{0.0};
};

struct TrialResult {
    std::vector<SampleRecord> samples;
    double avg_raw{0.0};
    double avg_clamped{0.0};
    PlannedTrajectory trajectory;
    SensorField field;
};

struct AggregateResult {
    std::vector<double> trial_avg_clamped;
    std::vector<double> trial_avg_raw;
    double mean_clamped{0.0};
    double mean_raw{0.0};
    double ci_low{0.0};  ///< 95% normal-approximation interval on the clamped mean
    double ci_high{0.0};
    int trials{0};
};

struct SampleEvaluation {
    SnrReport snr;
    BoundsReport bounds;
};

/// One Algorithm-1 sample at position q: channels, reflection phases, weights
/// per scheme, SNRs, rates, and (optionally) the Proposition-1/Eq.-13 bounds.
SampleEvaluation evaluate_sample(const Vec3& q, const SensorField& field, const IrsGrid& grid,
                                 const ScenarioConfig& cfg, const FadingDraw& fading,
                                 Scheme scheme, bool with_bounds);

/// Which secrecy evaluator scores trajectory candidates. All run at mean
/// fading (varsigma = 1) and are deterministic; Eve enters only through them.
///  - ExactIntegrand: the per-sample pipeline rate itself (spiky in position:
///    wavelength-scale nulls act as absorbing traps for the search);
///  - BoundZeta: the Eq.-13 bound integrand with the true per-sensor zeta;
///  - BoundWorstCase: the Eq.-13 bound integrand with the coherent worst case
///    zeta = K (the P5 form the closed-form trajectory analysis uses).
enum class PlannerObjectiveKind { ExactIntegrand, BoundZeta, BoundWorstCase };

inline constexpr PlannerObjectiveKind kDefaultPlannerObjective =
    PlannerObjectiveKind::BoundZeta;

/// Candidate objective for the trajectory search.
StepObjective make_planner_objective(const ScenarioConfig& cfg, const SensorField& field,
                                     PlannerObjectiveKind kind = kDefaultPlannerObjective);

/// One full flight: plan the trajectory (or hold the fixed-IRS point), then
/// walk Algorithm 1 over the N samples with fresh fading per sample.
TrialResult run_scenario(const ScenarioConfig& cfg, std::uint64_t trial_seed);

/// Monte-Carlo average over trials; per-trial seeds derive from (config seed,
/// trial index + offset), so results are independent of scheduling and two
/// disjoint index ranges pool exactly. threads = 0 resolves the worker count
/// from AIRS_SIM_THREADS / hardware.
AggregateResult monte_carlo(const ScenarioConfig& cfg, int trials, int trial_offset = 0,
                            int threads = 0);

/// Stationary-IRS baseline: the identical pipeline with the trajectory frozen
/// at (omega_fix_irs.x, omega_fix_irs.y, H) and eavesdropper-aware weights.
TrialResult fixed_irs_baseline(const ScenarioConfig& cfg, std::uint64_t trial_seed);

enum class SweepParam { TotalTime, Power, BobEveDistance, Elements, FieldRadius };

/// Parse one of {T, P, dist_BE, K, r}; throws ConfigError otherwise.
SweepParam sweep_param_from_string(const std::string& name);
std::string to_string(SweepParam p);

/// New scenario with one swept value applied. P values are dBm; K values must
/// be perfect squares; dist_BE slides Eve along the Bob->Eve line.
ScenarioConfig apply_sweep_value(const ScenarioConfig& cfg, SweepParam param, double value);

struct SweepRow {
    double param_value{0.0};
    AggregateResult aggregate;
};

/// One aggregate per value under common random numbers (same master seed).
std::vector<SweepRow> sweep(const ScenarioConfig& cfg, SweepParam param,
                            const std::vector<double>& values, int trials, int threads = 0);

/// Worker count: explicit requested value, else AIRS_SIM_THREADS, else hardware.
int resolve_thread_count(int requested);

// CSV emission (locale-independent, fixed column order).
std::string rates_csv(const TrialResult& trial);
std::string trajectory_csv(const PlannedTrajectory& traj);
std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace airs
