// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace airs {

/// Requested a direction between two coincident points.
struct DegenerateDirection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Sensor field with zero sensors.
struct EmptyField : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Channel evaluated at zero propagation distance.
struct Singularity : std::domain_error {
    using std::domain_error::domain_error;
};

/// Matrix is not square / not Hermitian where one is required.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Vector/matrix dimensions do not agree.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Effective channel is identically zero; MRT direction undefined.
struct ZeroChannel : std::domain_error {
    using std::domain_error::domain_error;
};

/// Geometry that the closed forms cannot handle (e.g. field center at the origin).
struct DegenerateGeometry : std::domain_error {
    using std::domain_error::domain_error;
};

/// Bad scenario configuration (unknown key, malformed value, infeasible derived quantity).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace airs
