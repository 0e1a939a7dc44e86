// SPDX-License-Identifier: Apache-2.0
#include "jcas/ofdm_config.hpp"

#include <cmath>
#include <string>

#include "jcas/error.hpp"

namespace jcas {

namespace {

std::size_t exact_ratio(std::size_t total, std::size_t part, const char* what)
{
    if (part == 0 || total % part != 0) {
        throw ConfigError(std::string(what) + ": " + std::to_string(total) +
                          " is not an integer multiple of " + std::to_string(part));
    }
    return total / part;
}

} // namespace

std::size_t OfdmConfig::freq_spacing() const
{
    return exact_ratio(n_subcarriers, n_sensing_freq, "frequency comb spacing");
}

std::size_t OfdmConfig::time_spacing() const
{
    return exact_ratio(n_symbols, n_sensing_time, "time comb spacing");
}

void OfdmConfig::validate() const
{
    auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
    if (!positive(carrier_freq) || !positive(subcarrier_spacing) || !positive(speed_of_light) ||
        !positive(block_duration) || !positive(symbol_duration_physical)) {
        throw ConfigError("OFDM frequencies, durations and speed of light must be positive");
    }
    if (n_subcarriers == 0 || n_symbols == 0 || n_sensing_freq == 0 || n_sensing_time == 0 ||
        n_diag == 0) {
        throw ConfigError("OFDM counts must be non-zero");
    }
    freq_spacing();
    time_spacing();
}

void OfdmConfig::validate_diagonal() const
{
    validate();
    if (n_diag != n_sensing_freq || n_diag != n_sensing_time) {
        throw ConfigError("diagonal scheme requires N = N_f = N_t");
    }
}

SensingCapabilities capabilities(const OfdmConfig& cfg)
{
    cfg.validate();
    const double c = cfg.speed_of_light;
    const double lf = static_cast<double>(cfg.freq_spacing());
    const double lt = static_cast<double>(cfg.time_spacing());
    const double tu = cfg.useful_symbol_duration();
    const double nt = static_cast<double>(cfg.n_sensing_time);

    SensingCapabilities caps;
    caps.range_resolution = c / (2.0 * static_cast<double>(cfg.n_subcarriers) * cfg.subcarrier_spacing);
    caps.velocity_resolution = c / (2.0 * cfg.carrier_freq * nt * lt * tu);
    caps.max_unambiguous_range = c / (2.0 * lf * cfg.subcarrier_spacing);
    caps.max_unambiguous_velocity = c / (2.0 * cfg.carrier_freq * lt * tu);
    return caps;
}

BinPosition grid_bins(const OfdmConfig& cfg, double range, double velocity)
{
    const double c = cfg.speed_of_light;
    const double lf = static_cast<double>(cfg.freq_spacing());
    const double lt = static_cast<double>(cfg.time_spacing());
    return {
        2.0 * lf * cfg.subcarrier_spacing * range * static_cast<double>(cfg.n_sensing_freq) / c,
        2.0 * lt * cfg.useful_symbol_duration() * cfg.carrier_freq * velocity *
            static_cast<double>(cfg.n_sensing_time) / c,
    };
}

BinPosition diag_bins(const OfdmConfig& cfg, double range, double velocity)
{
    const double c = cfg.speed_of_light;
    const double lf = static_cast<double>(cfg.freq_spacing());
    const double lt = static_cast<double>(cfg.time_spacing());
    const double n = static_cast<double>(cfg.n_diag);
    return {
        2.0 * lf * cfg.subcarrier_spacing * range * n / c,
        2.0 * lt * cfg.useful_symbol_duration() * cfg.carrier_freq * velocity * n / c,
    };
}

} // namespace jcas
