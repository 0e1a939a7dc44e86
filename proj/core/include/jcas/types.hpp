// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>

namespace jcas {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

struct RangeVelocity {
    double range = 0.0;    // m
    double velocity = 0.0; // m/s, positive = receding
};

/// One point reflector. The ground-truth unit of the simulation.
struct Target {
    double range = 0.0;           // m
    double radial_velocity = 0.0; // m/s, positive = receding
    double rcs = 1.0;             // m^2
};

inline double dbsm_to_m2(double dbsm) { return std::pow(10.0, dbsm / 10.0); }

} // namespace jcas
