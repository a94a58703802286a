// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "airs/channel.hpp"

namespace airs {

/// Effective-channel magnitude bounds and the SNR upper bounds they induce.
struct BoundsReport {
    Eigen::VectorXcd chi_b;   ///< per-sensor bound for Bob, |chi| = K sqrt(c_RB c_mR)
    Eigen::VectorXcd chi_e;   ///< per-sensor value for Eve (exact under the phase design)
    Complex zeta{0.0, 0.0};   ///< directional coherence sum at the field centroid
    double gamma_b_ub{0.0};
    double gamma_e_ub{0.0};
    double pbar{0.0};         ///< P / sigma_B^2
};

/// chi_mB = K sqrt(c_RB c_mR) e^{-j(phi^a_mR + phi^a_RB - theta_com)}.
Eigen::VectorXcd chi_bob(double c_rb, const Eigen::VectorXd& c_mr,
                         const Eigen::VectorXd& phi_a_mr, double phi_a_rb, double theta_com,
                         int k_elements);

/// Directional coherence sum over the element lattice:
///   zeta = sum_kx sum_ky e^{j[(kx-1) dbar_x (dE.x + dB.x - dS.x)
///                            + (ky-1) dbar_y (dE.y + dB.y - dS.y) + u_g(k)]}.
/// dir_b must be the same ground-to-UAV steering direction the reflection design
/// uses; |zeta| <= K with equality iff every summand phase is 0 mod 2pi.
Complex zeta_sum(const IrsGrid& grid, const Vec3& dir_e, const Vec3& dir_b, const Vec3& dir_s,
                 const Eigen::VectorXd& u_g);

struct EveBound {
    Complex zeta_centroid{0.0, 0.0};
    std::vector<Complex> zeta_per_sensor;
    Eigen::VectorXcd chi;
};

/// zeta (per sensor and at the centroid direction) and
/// chi_mE = sqrt(c_RE c_mR) e^{-j(phi^a_RE + phi^a_mR - theta_com)} zeta_m.
EveBound zeta_and_chi_eve(const IrsGrid& grid, const Vec3& dir_e, const Vec3& dir_b,
                          const std::vector<Vec3>& dirs_sensor, const Vec3& dir_centroid,
                          const Eigen::VectorXd& u_g, double c_re,
                          const Eigen::VectorXd& c_mr, const Eigen::VectorXd& phi_a_mr,
                          double phi_a_re, double theta_com);

/// sum_m pbar rho0^2 vs_node vs_field coh_m^2 / (d_node^2 d_m^2).
/// coh_m is K for Bob and |zeta_m| for Eve. Uses the same fading draws as the
/// simulated channel so dominance holds per sample, not just in expectation.
double snr_upper_bound(double pbar, double rho0, double vs_node, double vs_field,
                       const Eigen::VectorXd& coherence, double d_node,
                       const Eigen::VectorXd& d_sensors);

} // namespace airs
