// SPDX-License-Identifier: Apache-2.0
#include "airs/bounds.hpp"

#include <cmath>

#include "airs/errors.hpp"

namespace airs {

Eigen::VectorXcd chi_bob(double c_rb, const Eigen::VectorXd& c_mr,
                         const Eigen::VectorXd& phi_a_mr, double phi_a_rb, double theta_com,
                         int k_elements) {
    if (c_mr.size() != phi_a_mr.size()) {
        throw DimensionError("chi_bob: gain/phase length mismatch");
    }
    Eigen::VectorXcd chi(c_mr.size());
    for (Eigen::Index m = 0; m < c_mr.size(); ++m) {
        chi[m] = static_cast<double>(k_elements) * std::sqrt(c_rb * c_mr[m]) *
                 std::polar(1.0, -(phi_a_mr[m] + phi_a_rb - theta_com));
    }
    return chi;
}

Complex zeta_sum(const IrsGrid& grid, const Vec3& dir_e, const Vec3& dir_b, const Vec3& dir_s,
                 const Eigen::VectorXd& u_g) {
    if (u_g.size() != grid.size()) {
        throw DimensionError("zeta_sum: u_g length must be K");
    }
    const double ax = grid.dbar_x() * (dir_e.x + dir_b.x - dir_s.x);
    const double ay = grid.dbar_y() * (dir_e.y + dir_b.y - dir_s.y);
    Complex acc{0.0, 0.0};
    for (int ky = 1; ky <= grid.ky(); ++ky) {
        for (int kx = 1; kx <= grid.kx(); ++kx) {
            const double phase =
                (kx - 1) * ax + (ky - 1) * ay + u_g[grid.flat_index(kx, ky)];
            acc += std::polar(1.0, phase);
        }
    }
    return acc;
}

EveBound zeta_and_chi_eve(const IrsGrid& grid, const Vec3& dir_e, const Vec3& dir_b,
                          const std::vector<Vec3>& dirs_sensor, const Vec3& dir_centroid,
                          const Eigen::VectorXd& u_g, double c_re,
                          const Eigen::VectorXd& c_mr, const Eigen::VectorXd& phi_a_mr,
                          double phi_a_re, double theta_com) {
    const auto m_count = static_cast<Eigen::Index>(dirs_sensor.size());
    if (c_mr.size() != m_count || phi_a_mr.size() != m_count) {
        throw DimensionError("zeta_and_chi_eve: per-sensor arrays disagree");
    }
    EveBound out;
    out.zeta_centroid = zeta_sum(grid, dir_e, dir_b, dir_centroid, u_g);
    out.zeta_per_sensor.resize(static_cast<std::size_t>(m_count));
    out.chi.resize(m_count);
    for (Eigen::Index m = 0; m < m_count; ++m) {
        const Complex zm =
            zeta_sum(grid, dir_e, dir_b, dirs_sensor[static_cast<std::size_t>(m)], u_g);
        out.zeta_per_sensor[static_cast<std::size_t>(m)] = zm;
        out.chi[m] = std::sqrt(c_re * c_mr[m]) *
                     std::polar(1.0, -(phi_a_re + phi_a_mr[m] - theta_com)) * zm;
    }
    return out;
}

double snr_upper_bound(double pbar, double rho0, double vs_node, double vs_field,
                       const Eigen::VectorXd& coherence, double d_node,
                       const Eigen::VectorXd& d_sensors) {
    if (coherence.size() != d_sensors.size()) {
        throw DimensionError("snr_upper_bound: coherence/distance length mismatch");
    }
    double acc = 0.0;
    for (Eigen::Index m = 0; m < coherence.size(); ++m) {
        acc += pbar * rho0 * rho0 * vs_node * vs_field * coherence[m] * coherence[m] /
               (d_node * d_node * d_sensors[m] * d_sensors[m]);
    }
    return acc;
}

} // namespace airs
