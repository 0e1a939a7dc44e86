// SPDX-License-Identifier: Apache-2.0
#include "jcas/channel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "jcas/error.hpp"

namespace jcas {

namespace {

// Portable uniform in [0, 1); std::uniform_real_distribution is implementation-defined.
double uniform01(std::mt19937_64& gen)
{
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

void check_targets(std::span<const Target> targets, std::span<const cplx> amps)
{
    if (targets.empty()) {
        throw std::invalid_argument("channel synthesis needs at least one target");
    }
    if (targets.size() != amps.size()) {
        throw std::invalid_argument("one amplitude is required per target");
    }
    for (const auto& t : targets) {
        if (!(t.range > 0.0) || !std::isfinite(t.range) || !std::isfinite(t.radial_velocity)) {
            throw DegenerateInput("target range must be positive and finite");
        }
    }
}

// exp(j 2 pi bin k / n) for k in [0, count), with the bin*k product reduced mod n first.
std::vector<cplx> phase_ramp(double bin, std::size_t n, std::size_t count)
{
    std::vector<cplx> ramp(count);
    const double nn = static_cast<double>(n);
    for (std::size_t k = 0; k < count; ++k) {
        double x = bin * static_cast<double>(k);
        x -= nn * std::floor(x / nn);
        ramp[k] = std::polar(1.0, 2.0 * kPi * x / nn);
    }
    return ramp;
}

double strongest(std::span<const cplx> amps)
{
    double m = 0.0;
    for (const auto& a : amps) {
        m = std::max(m, std::abs(a));
    }
    return m;
}

} // namespace

double rx_power(const LinkBudget& budget, const OfdmConfig& cfg, const Target& target)
{
    if (!(target.range > 0.0)) {
        throw DegenerateInput("received power is undefined at range <= 0");
    }
    const double lambda = cfg.wavelength();
    const double four_pi_cubed = std::pow(4.0 * kPi, 3);
    return budget.tx_power * budget.tx_gain * budget.rx_gain * target.rcs * lambda * lambda /
           (four_pi_cubed * std::pow(target.range, 4) * cfg.carrier_freq * cfg.carrier_freq);
}

std::vector<cplx> echo_amplitudes(const LinkBudget& budget, const OfdmConfig& cfg,
                                  std::span<const Target> targets, std::uint64_t seed)
{
    std::vector<double> power;
    power.reserve(targets.size());
    for (const auto& t : targets) {
        power.push_back(rx_power(budget, cfg, t));
    }
    const double ref = power.empty() ? 1.0 : *std::max_element(power.begin(), power.end());

    std::mt19937_64 gen(seed);
    std::vector<cplx> amps;
    amps.reserve(targets.size());
    for (double p : power) {
        const double phase = 2.0 * kPi * uniform01(gen);
        amps.push_back(std::polar(std::sqrt(p / ref), phase));
    }
    return amps;
}

SymbolMatrix synthesize_grid(const OfdmConfig& cfg, std::span<const Target> targets,
                             std::span<const cplx> amps, const NoiseSpec& noise)
{
    cfg.validate();
    check_targets(targets, amps);

    const std::size_t nf = cfg.n_sensing_freq;
    const std::size_t nt = cfg.n_sensing_time;
    SymbolMatrix c(nf, nt);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const auto bins = grid_bins(cfg, targets[t].range, targets[t].radial_velocity);
        // Range ramp carries exp(-j...), Doppler ramp exp(+j...).
        const auto range_ramp = phase_ramp(-bins.range_bin, nf, nf);
        const auto doppler_ramp = phase_ramp(bins.doppler_bin, nt, nt);
        for (std::size_t i = 0; i < nf; ++i) {
            const cplx row_factor = amps[t] * range_ramp[i];
            auto row = c.row(i);
            for (std::size_t j = 0; j < nt; ++j) {
                row[j] += row_factor * doppler_ramp[j];
            }
        }
    }
    add_awgn(c.values(), strongest(amps), noise);
    return c;
}

DiagonalVector synthesize_diag(const OfdmConfig& cfg, std::span<const Target> targets,
                               std::span<const cplx> amps, const NoiseSpec& noise, DiagonalModel model)
{
    cfg.validate_diagonal();
    check_targets(targets, amps);

    const std::size_t n = cfg.n_diag;
    DiagonalVector d{std::vector<cplx>(n)};
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const auto bins = diag_bins(cfg, targets[t].range, targets[t].radial_velocity);
        if (model == DiagonalModel::SingleTone) {
            const auto ramp = phase_ramp(bins.doppler_bin - bins.range_bin, n, n);
            for (std::size_t k = 0; k < n; ++k) {
                d.values[k] += amps[t] * ramp[k];
            }
        } else {
            const auto upper = phase_ramp(bins.range_bin + bins.doppler_bin, n, n);
            const auto lower = phase_ramp(std::abs(bins.range_bin - bins.doppler_bin), n, n);
            const cplx half = 0.5 * amps[t];
            for (std::size_t k = 0; k < n; ++k) {
                d.values[k] += half * (upper[k] + lower[k]);
            }
        }
    }
    add_awgn(d.values, strongest(amps), noise);
    return d;
}

void add_awgn(std::span<cplx> values, double signal_amplitude, const NoiseSpec& noise)
{
    if (!noise.snr_db) {
        return;
    }
    if (!std::isfinite(*noise.snr_db)) {
        throw std::invalid_argument("snr_db must be finite");
    }
    const double variance = signal_amplitude * signal_amplitude / std::pow(10.0, *noise.snr_db / 10.0);
    const double sigma = std::sqrt(variance / 2.0); // per real dimension

    std::mt19937_64 gen(noise.rng_seed);
    for (auto& v : values) {
        // Box-Muller; 1 - u keeps the log argument in (0, 1].
        const double u1 = 1.0 - uniform01(gen);
        const double u2 = uniform01(gen);
        const double r = sigma * std::sqrt(-2.0 * std::log(u1));
        v += std::polar(r, 2.0 * kPi * u2);
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace jcas
