// SPDX-License-Identifier: Apache-2.0
#include "airs/beamform.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <numbers>

#include "airs/errors.hpp"

namespace airs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxPowerIters = 10000;
constexpr double kPowerTol = 1e-12;

double wrap_2pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    return r;
}

double rayleigh_quotient(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& v) {
    return (v.adjoint() * m * v).value().real() / v.squaredNorm();
}

// Power iteration on (m + shift*I) from a given start; shift >= rho(m) keeps the
// top eigenvalue of m dominant and the Rayleigh quotient monotone.
Eigen::VectorXcd power_iterate(const Eigen::MatrixXcd& m, double shift,
                               Eigen::VectorXcd v) {
    const auto n = m.rows();
    v.normalize();
    Eigen::VectorXcd next(n);
    for (int it = 0; it < kMaxPowerIters; ++it) {
        next = m * v + shift * v;
        const double norm = next.norm();
        if (norm == 0.0) {
            return v; // v spans the kernel of the shifted matrix; nothing to improve
        }
        next /= norm;
        if ((next - v).norm() <= kPowerTol) {
            return next;
        }
        v.swap(next);
    }
    return v;
}

} // namespace

Eigen::MatrixXcd ReflectionState::apply(const Eigen::MatrixXcd& m) const {
    Eigen::VectorXcd diag(theta.size());
    for (Eigen::Index k = 0; k < theta.size(); ++k) {
        diag[k] = std::polar(1.0, theta[k]);
    }
    return diag.asDiagonal() * m;
}

Eigen::VectorXd rank1_phase_vector(const Eigen::MatrixXd& phi_g) {
    const Eigen::Index k = phi_g.rows();
    const Eigen::Index m = phi_g.cols();
    if (k < 1 || m < 1) {
        return Eigen::VectorXd::Zero(std::max<Eigen::Index>(k, 0));
    }
    if (phi_g.isZero(0.0)) {
        return Eigen::VectorXd::Zero(k);
    }
    // Leading right singular vector of Phi from the M x M Gram matrix, using the
    // same deterministic Hermitian solver as everything else.
    const Eigen::MatrixXd gram = phi_g.transpose() * phi_g;
    const EigenPair top = max_eigvec_hermitian(gram.cast<Complex>());
    if (top.value <= 0.0) {
        return Eigen::VectorXd::Zero(k);
    }
    Eigen::VectorXd v1 = top.vector.real();
    const double vnorm = v1.norm();
    if (vnorm == 0.0) {
        return Eigen::VectorXd::Zero(k);
    }
    v1 /= vnorm;
    // sigma1 * u1 * mean(v1) == Phi * v1 * mean(v1); invariant under the sign of v1.
    return phi_g * v1 * v1.mean();
}

ReflectionState reflection_phases(const Eigen::VectorXd& u_b, const Eigen::VectorXd& u_g,
                                  double theta_com) {
    if (u_b.size() != u_g.size()) {
        throw DimensionError("reflection_phases: u_b and u_g length mismatch");
    }
    ReflectionState state;
    state.theta_com = theta_com;
    state.u_g = u_g;
    state.theta.resize(u_b.size());
    for (Eigen::Index i = 0; i < u_b.size(); ++i) {
        state.theta[i] = wrap_2pi(theta_com + u_b[i] + u_g[i]);
    }
    return state;
}

EigenPair max_eigvec_hermitian(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw ShapeError("max_eigvec_hermitian: matrix must be square");
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
        throw ShapeError("max_eigvec_hermitian: matrix is not Hermitian");
    }
    const auto n = m.rows();
    // infinity norm bounds the spectral radius, so m + shift*I is PSD
    const double shift = m.cwiseAbs().rowwise().sum().maxCoeff();

    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    v[0] = 1.0;
    v = power_iterate(m, shift, v);
    double value = rayleigh_quotient(m, v);

    // A canonical start orthogonal to the dominant eigenspace can stall below a
    // diagonal entry; restarting from the best canonical direction fixes that
    // (the shifted iteration never decreases the Rayleigh quotient).
    Eigen::Index best_diag = 0;
    m.diagonal().real().maxCoeff(&best_diag);
    if (m.diagonal().real()[best_diag] > value + 1e-12 * (1.0 + std::abs(value))) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
        e[best_diag] = 1.0;
        e = power_iterate(m, shift, e);
        const double val2 = rayleigh_quotient(m, e);
        if (val2 > value) {
            v = e;
            value = val2;
        }
    }
    return {value, v};
}

Eigen::RowVectorXcd effective_row(const Eigen::VectorXcd& h, const Eigen::VectorXd& theta,
                                  const Eigen::MatrixXcd& g) {
    if (h.size() != g.rows() || theta.size() != g.rows()) {
        throw DimensionError("effective_row: h/theta/G dimensions disagree");
    }
    Eigen::VectorXcd phased(h.size());
    for (Eigen::Index k = 0; k < h.size(); ++k) {
        phased[k] = std::conj(h[k]) * std::polar(1.0, theta[k]);
    }
    return phased.transpose() * g;
}

Eigen::MatrixXcd quad_form_matrix(const Eigen::RowVectorXcd& row, double sigma2) {
    return (row.adjoint() * row) / sigma2;
}

Beamformer weights_scheme1(const Eigen::VectorXcd& h_b, const Eigen::VectorXd& theta,
                           const Eigen::MatrixXcd& g, double power, double sigma_b2) {
    const Eigen::RowVectorXcd row = effective_row(h_b, theta, g);
    const double norm = row.norm();
    if (norm == 0.0) {
        throw ZeroChannel("weights_scheme1: effective channel is zero");
    }
    Beamformer bf;
    bf.power = power;
    bf.a = quad_form_matrix(row, sigma_b2);
    bf.b = Eigen::MatrixXcd::Zero(row.cols(), row.cols());
    // A is rank one, so its top eigenvector is the normalized conjugate row.
    bf.w = std::sqrt(power) * (row.adjoint() / norm);
    return bf;
}

double p3b_objective(const Eigen::VectorXcd& w, const Eigen::MatrixXcd& a,
                     const Eigen::MatrixXcd& b) {
    const double num = 1.0 + (w.adjoint() * a * w).value().real();
    const double den = 1.0 + (w.adjoint() * b * w).value().real();
    return num / den;
}

Beamformer weights_scheme2(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double power) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw ShapeError("weights_scheme2: A and B must be square and equally sized");
    }
    if (!(power > 0.0)) {
        throw std::invalid_argument("weights_scheme2: power must be positive");
    }
    const auto m = a.rows();
    const Eigen::MatrixXcd ridge = Eigen::MatrixXcd::Identity(m, m) / power;
    const Eigen::MatrixXcd a_t = a + ridge;
    const Eigen::MatrixXcd b_t = b + ridge;

    // (B + I/P)^{-1}(A + I/P) is similar to L^{-1} (A + I/P) L^{-H} with
    // B + I/P = L L^H, so the dominant eigenvector comes from the Hermitian solver.
    Eigen::LLT<Eigen::MatrixXcd> llt(b_t);
    const Eigen::MatrixXcd l = llt.matrixL();
    const Eigen::MatrixXcd y =
        l.triangularView<Eigen::Lower>().solve(a_t); // L^{-1} (A + I/P)
    Eigen::MatrixXcd sym =
        l.triangularView<Eigen::Lower>().solve(y.adjoint()).adjoint(); // ... L^{-H}
    sym = 0.5 * (sym + sym.adjoint().eval());

    const EigenPair top = max_eigvec_hermitian(sym);
    Eigen::VectorXcd dir = l.adjoint().triangularView<Eigen::Upper>().solve(top.vector);
    const double dn = dir.norm();

    const double sqrt_p = std::sqrt(power);
    Eigen::VectorXcd w2;
    if (dn > 0.0) {
        w2 = sqrt_p * dir / dn;
    }

    // Scheme-1 direction as the tie fallback (exact objective ties, e.g. A == B).
    const EigenPair top_a = max_eigvec_hermitian(a);
    const Eigen::VectorXcd w1 = sqrt_p * top_a.vector.normalized();

    Beamformer bf;
    bf.power = power;
    bf.a = a;
    bf.b = b;
    const double obj1 = p3b_objective(w1, a, b);
    const double obj2 = (w2.size() > 0) ? p3b_objective(w2, a, b) : 0.0;
    bf.w = (obj2 > obj1 * (1.0 + 1e-12)) ? w2 : w1;
    return bf;
}

double snr(const Eigen::VectorXcd& h, const Eigen::VectorXd& theta, const Eigen::MatrixXcd& g,
           const Eigen::VectorXcd& w, double sigma2) {
    if (w.size() != g.cols()) {
        throw DimensionError("snr: w length must match the sensor count");
    }
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("snr: noise power must be positive");
    }
    const Complex composed = (effective_row(h, theta, g) * w).value();
    return std::norm(composed) / sigma2;
}

RatePair secrecy_rate(double gamma_b, double gamma_e) {
    const double raw = (std::log1p(gamma_b) - std::log1p(gamma_e)) / std::numbers::ln2;
    return {raw, std::max(0.0, raw)};
}

} // namespace airs
