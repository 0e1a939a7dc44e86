// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "jcas/types.hpp"

namespace jcas {

/// OFDM block parameters plus the derived spacings used by every other module.
///
/// Defaults are the 28 GHz / 3360 x 3360 traffic-monitoring block with a
/// 480 x 480 sensing comb. Phase and estimation math run on the useful symbol
/// duration 1/subcarrier_spacing; symbol_duration_physical (which includes the
/// cyclic prefix) only feeds block-duration bookkeeping.
struct OfdmConfig {
    double carrier_freq = 28.0e9;         // Hz
    double subcarrier_spacing = 120.0e3;  // Hz
    std::size_t n_subcarriers = 3360;     // N_c
    std::size_t n_symbols = 3360;         // N_sym
    std::size_t n_sensing_freq = 480;     // N_f
    std::size_t n_sensing_time = 480;     // N_t
    std::size_t n_diag = 480;             // N
    double block_duration = 30.0e-3;      // s
    double symbol_duration_physical = 8.92e-6; // s, with cyclic prefix
    double speed_of_light = 3.0e8;        // m/s

    /// T_u = 1 / subcarrier_spacing.
    double useful_symbol_duration() const { return 1.0 / subcarrier_spacing; }
    double bandwidth() const { return static_cast<double>(n_subcarriers) * subcarrier_spacing; }
    double wavelength() const { return speed_of_light / carrier_freq; }

    /// L_f = N_c / N_f. Throws ConfigError when not an exact integer.
    std::size_t freq_spacing() const;
    /// L_t = N_sym / N_t. Throws ConfigError when not an exact integer.
    std::size_t time_spacing() const;

    /// Checks positivity and integral comb spacings.
    void validate() const;
    /// validate() plus N = N_f = N_t.
    void validate_diagonal() const;

    friend bool operator==(const OfdmConfig&, const OfdmConfig&) = default;
};

struct SensingCapabilities {
    double range_resolution = 0.0;         // m
    double velocity_resolution = 0.0;      // m/s
    double max_unambiguous_range = 0.0;    // m
    double max_unambiguous_velocity = 0.0; // m/s
};

SensingCapabilities capabilities(const OfdmConfig& cfg);

/// Fractional DFT bin positions of a reflector.
///
/// For the grid these are the (p, q) bins of the range IDFT / Doppler DFT. For
/// the diagonal they are l_R and l_D of the length-N transform; a dual-tone
/// echo then peaks at |l_R - l_D| and l_R + l_D.
struct BinPosition {
    double range_bin = 0.0;
    double doppler_bin = 0.0;
};

BinPosition grid_bins(const OfdmConfig& cfg, double range, double velocity);
BinPosition diag_bins(const OfdmConfig& cfg, double range, double velocity);

} // namespace jcas
