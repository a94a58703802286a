// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "airs/channel.hpp"

namespace airs {

/// Reflection phases theta_k for the K IRS elements, reduced to [0, 2pi).
struct ReflectionState {
    Eigen::VectorXd theta;
    double theta_com{0.0};
    Eigen::VectorXd u_g;

    /// diag(e^{j theta}) applied from the left: returns diag * m.
    Eigen::MatrixXcd apply(const Eigen::MatrixXcd& m) const;
};

/// Sensor beamforming weights with the quadratic forms they optimize.
struct Beamformer {
    Eigen::VectorXcd w;
    double power{0.0};
    Eigen::MatrixXcd a; ///< Bob's Hermitian PSD form
    Eigen::MatrixXcd b; ///< Eve's Hermitian PSD form (zero for scheme 1)
};

/// Per-sample SNRs and the secrecy rate they induce.
struct SnrReport {
    double gamma_b{0.0};
    double gamma_e{0.0};
    double sigma_b2{0.0};
    double sigma_e2{0.0};
    double rate_raw{0.0};
    double rate_clamped{0.0};
};

struct EigenPair {
    double value{0.0};
    Eigen::VectorXcd vector;
};

struct RatePair {
    double raw{0.0};
    double clamped{0.0};
};

/// Rank-1 column representative of the real phase matrix Phi_G:
/// sigma1 * u1 * mean(v1) from the leading singular triple, so that identical
/// columns are recovered exactly. A zero matrix yields the zero vector.
Eigen::VectorXd rank1_phase_vector(const Eigen::MatrixXd& phi_g);

/// theta_k = theta_com + u_b[k] + u_g[k], reduced mod 2pi.
///
/// u_b must be the element response phases along the *ground-to-UAV* direction
/// of the main receiver; with the e^{-j phi} channel convention this is what
/// makes the composed per-element phase at the receiver constant (see the
/// co-phasing tests).
ReflectionState reflection_phases(const Eigen::VectorXd& u_b, const Eigen::VectorXd& u_g,
                                  double theta_com);

/// Dominant eigenpair of a Hermitian matrix by deterministic power iteration:
/// spectral shift to make the top eigenvalue dominant, canonical e1 start,
/// tolerance 1e-12, iteration cap 1e4. Ties / orthogonal starts are resolved
/// by restarting from the canonical basis vector with the largest Rayleigh
/// quotient, so the returned value is never below any diagonal entry.
EigenPair max_eigvec_hermitian(const Eigen::MatrixXcd& m);

/// Effective 1 x M row h^H diag(e^{j theta}) G.
Eigen::RowVectorXcd effective_row(const Eigen::VectorXcd& h, const Eigen::VectorXd& theta,
                                  const Eigen::MatrixXcd& g);

/// row^H row / sigma2 — the Hermitian PSD quadratic form of an effective row.
Eigen::MatrixXcd quad_form_matrix(const Eigen::RowVectorXcd& row, double sigma2);

/// MRT toward the UAV: w = sqrt(P) times the normalized conjugate of the
/// effective row (the top eigenvector of the rank-1 form A).
Beamformer weights_scheme1(const Eigen::VectorXcd& h_b, const Eigen::VectorXd& theta,
                           const Eigen::MatrixXcd& g, double power, double sigma_b2);

/// Eavesdropper-aware weights: w = sqrt(P) times the dominant eigenvector of
/// (B + I/P)^{-1} (A + I/P), computed through the Cholesky factor of B + I/P so
/// the power iteration runs on a Hermitian matrix. When the objective ties with
/// the scheme-1 direction (e.g. A == B), the scheme-1 direction is returned.
Beamformer weights_scheme2(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double power);

/// gamma = |h^H diag(e^{j theta}) G w|^2 / sigma2.
double snr(const Eigen::VectorXcd& h, const Eigen::VectorXd& theta, const Eigen::MatrixXcd& g,
           const Eigen::VectorXcd& w, double sigma2);

/// raw = log2((1+gamma_b)/(1+gamma_e)); clamped = max(0, raw).
RatePair secrecy_rate(double gamma_b, double gamma_e);

/// Scheme-2 objective (1 + w^H A w) / (1 + w^H B w).
double p3b_objective(const Eigen::VectorXcd& w, const Eigen::MatrixXcd& a,
                     const Eigen::MatrixXcd& b);

} // namespace airs
