// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "airs/geometry.hpp"
#include "airs/vec3.hpp"

namespace airs {

using Complex = std::complex<double>;

/// One set of unit-mean exponential fading draws plus the reference gain rho0.
/// A fresh draw is taken for every time sample; ς_G is shared by all sensors
/// of the field (the paper indexes it per hop, not per sensor).
struct FadingDraw {
    double varsigma_g{1.0};
    double varsigma_b{1.0};
    double varsigma_e{1.0};
    double rho0{1.0};
};

/// Sensors -> IRS hop: K x M complex matrix G plus the pieces it was built from.
///
/// Far-field collapse: per sensor m there is one gain c_mR and one bulk phase
/// (both taken at the UAV reference element); the element index k enters only
/// through the array-response phase phi_g(k, m).
struct SensorIrsChannel {
    Eigen::MatrixXcd g;          ///< K x M, g(k,m) = sqrt(c_mR) e^{-j bulk_m} e^{-j phi_g(k,m)}
    Eigen::MatrixXd phi_g;       ///< K x M array-response phases (row 0 is the reference: zeros)
    Eigen::VectorXd gain_cmr;    ///< per-sensor linear gain c_mR
    Eigen::VectorXd bulk_phase;  ///< per-sensor bulk phase (radians, not reduced mod 2pi)
};

/// IRS -> ground-node hop: length-K complex vector h plus its response phases.
struct IrsGroundChannel {
    Eigen::VectorXcd h;       ///< h(k) = sqrt(c_Ri) e^{-j bulk} e^{-j u(k)}
    Eigen::VectorXd u;        ///< K array-response phases, u(0) = 0
    double gain{0.0};         ///< c_Ri
    double bulk_phase{0.0};   ///< phi^a_Ri (radians)
    double dist{0.0};         ///< propagation distance (m)
};

/// Free-space power gain rho0 * varsigma / ||b - a||^2. Throws Singularity at zero distance.
double path_gain(double rho0, double varsigma, const Vec3& a, const Vec3& b);

/// Distance phase (2*pi/lambda) * ||b - a||, not reduced mod 2pi.
double bulk_phase(const Vec3& a, const Vec3& b, double wavelength);

/// Array-response phase of element (kx_idx, ky_idx) toward a unit direction:
/// (kx-1)*dbar_x*dir.x + (ky-1)*dbar_y*dir.y. The lattice is planar, so the
/// z component carries a zero weight. Indices are 1-based; out of range throws.
double element_response_phase(int kx_idx, int ky_idx, const IrsGrid& grid, const Vec3& direction);

/// All K response phases for one direction, in flat (kx-fastest) element order.
Eigen::VectorXd irs_response_phases(const IrsGrid& grid, const Vec3& direction);

/// Build G, Phi_G and the per-sensor gains/bulk phases for a UAV at uav_ref.
SensorIrsChannel build_sensor_irs(const SensorField& field, const Vec3& uav_ref,
                                  const IrsGrid& grid, const FadingDraw& fading);

/// Build h (and u) between the IRS at uav_ref and one ground node.
IrsGroundChannel build_irs_ground(const Vec3& uav_ref, const Vec3& target, const IrsGrid& grid,
                                  double rho0, double varsigma);

} // namespace airs
