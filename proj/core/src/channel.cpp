// SPDX-License-Identifier: Apache-2.0
#include "airs/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace airs {

namespace {

// e^{j (k-1) delta} for k = 1..n via an incremental rotation (avoids n polar calls).
void phase_ramp(double delta, int n, std::vector<Complex>& out) {
    out.resize(static_cast<std::size_t>(n));
    const Complex rot = std::polar(1.0, delta);
    Complex cur{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = cur;
        cur *= rot;
    }
}

} // namespace

double path_gain(double rho0, double varsigma, const Vec3& a, const Vec3& b) {
    const double d2 = (b - a).norm_sq();
    if (d2 == 0.0) {
        throw Singularity("path_gain: zero propagation distance");
    }
    return rho0 * varsigma / d2;
}

double bulk_phase(const Vec3& a, const Vec3& b, double wavelength) {
    const double d = distance(a, b);
    if (d == 0.0) {
        throw Singularity("bulk_phase: zero propagation distance");
    }
    return 2.0 * std::numbers::pi * d / wavelength;
}

double element_response_phase(int kx_idx, int ky_idx, const IrsGrid& grid,
                              const Vec3& direction) {
    if (kx_idx < 1 || kx_idx > grid.kx() || ky_idx < 1 || ky_idx > grid.ky()) {
        throw std::out_of_range("element_response_phase: element index out of range");
    }
    return (kx_idx - 1) * grid.dbar_x() * direction.x +
           (ky_idx - 1) * grid.dbar_y() * direction.y;
}

Eigen::VectorXd irs_response_phases(const IrsGrid& grid, const Vec3& direction) {
    Eigen::VectorXd u(grid.size());
    const double ax = grid.dbar_x() * direction.x;
    const double ay = grid.dbar_y() * direction.y;
    for (int ky = 1; ky <= grid.ky(); ++ky) {
        for (int kx = 1; kx <= grid.kx(); ++kx) {
            u[grid.flat_index(kx, ky)] = (kx - 1) * ax + (ky - 1) * ay;
        }
    }
    return u;
}

SensorIrsChannel build_sensor_irs(const SensorField& field, const Vec3& uav_ref,
                                  const IrsGrid& grid, const FadingDraw& fading) {
    const int k = grid.size();
    const int m = field.count();
    SensorIrsChannel ch;
    ch.g.resize(k, m);
    ch.phi_g.resize(k, m);
    ch.gain_cmr.resize(m);
    ch.bulk_phase.resize(m);

    std::vector<Complex> ramp_x, ramp_y;
    for (int col = 0; col < m; ++col) {
        const Vec3& sensor = field.positions[static_cast<std::size_t>(col)];
        const double c_mr = path_gain(fading.rho0, fading.varsigma_g, sensor, uav_ref);
        const double phi_a = bulk_phase(sensor, uav_ref, grid.wavelength());
        const Vec3 dir = unit_vector(sensor, uav_ref); // sensor -> UAV
        ch.gain_cmr[col] = c_mr;
        ch.bulk_phase[col] = phi_a;

        const double ax = grid.dbar_x() * dir.x;
        const double ay = grid.dbar_y() * dir.y;
        // conj ramps: each element multiplies by e^{-j phi^b}
        phase_ramp(-ax, grid.kx(), ramp_x);
        phase_ramp(-ay, grid.ky(), ramp_y);

        const Complex common = std::sqrt(c_mr) * std::polar(1.0, -phi_a);
        for (int ky = 1; ky <= grid.ky(); ++ky) {
            for (int kx = 1; kx <= grid.kx(); ++kx) {
                const int idx = grid.flat_index(kx, ky);
                ch.phi_g(idx, col) = (kx - 1) * ax + (ky - 1) * ay;
                ch.g(idx, col) = common * ramp_x[static_cast<std::size_t>(kx - 1)] *
                                 ramp_y[static_cast<std::size_t>(ky - 1)];
            }
        }
    }
    return ch;
}

IrsGroundChannel build_irs_ground(const Vec3& uav_ref, const Vec3& target, const IrsGrid& grid,
                                  double rho0, double varsigma) {
    IrsGroundChannel ch;
    ch.dist = distance(uav_ref, target);
    ch.gain = path_gain(rho0, varsigma, uav_ref, target);
    ch.bulk_phase = bulk_phase(uav_ref, target, grid.wavelength());
    const Vec3 dir = unit_vector(uav_ref, target); // UAV -> ground node (reflected signal)
    ch.u = irs_response_phases(grid, dir);

    const int k = grid.size();
    ch.h.resize(k);
    const Complex common = std::sqrt(ch.gain) * std::polar(1.0, -ch.bulk_phase);
    std::vector<Complex> ramp_x, ramp_y;
    phase_ramp(-grid.dbar_x() * dir.x, grid.kx(), ramp_x);
    phase_ramp(-grid.dbar_y() * dir.y, grid.ky(), ramp_y);
    for (int ky = 1; ky <= grid.ky(); ++ky) {
        for (int kx = 1; kx <= grid.kx(); ++kx) {
            ch.h[grid.flat_index(kx, ky)] = common * ramp_x[static_cast<std::size_t>(kx - 1)] *
                                            ramp_y[static_cast<std::size_t>(ky - 1)];
        }
    }
    return ch;
}

} // namespace airs
