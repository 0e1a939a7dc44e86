// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jcas/ofdm_config.hpp"
#include "jcas/types.hpp"

namespace jcas {

struct LinkBudget {
    double tx_power = 1.0; // W
    double tx_gain = 1.0;  // linear
    double rx_gain = 1.0;  // linear
};

/// SingleTone is the literal product of the range and Doppler phase ramps along
/// the diagonal. DualTone splits each echo into tones at l_R + l_D and
/// |l_R - l_D|, which is the dual-peak profile the diagonal estimator expects.
enum class DiagonalModel { SingleTone, DualTone };

/// Absent snr_db means a noiseless channel.
struct NoiseSpec {
    std::optional<double> snr_db;
    std::uint64_t rng_seed = 0;
};

/// Normalized Rx/Tx quotient on the sensing grid, N_f rows (subcarrier) by N_t columns (symbol).
class SymbolMatrix {
public:
    SymbolMatrix() = default;
    SymbolMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

    std::span<cplx> row(std::size_t i) { return {values_.data() + i * cols_, cols_}; }
    std::span<const cplx> row(std::size_t i) const { return {values_.data() + i * cols_, cols_}; }

    std::span<cplx> values() { return values_; }
    std::span<const cplx> values() const { return values_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> values_;
};

/// Normalized Rx/Tx quotient along the block diagonal, length N.
struct DiagonalVector {
    std::vector<cplx> values;
};

/// Received power of one reflector:
///   P_Tx G_Tx G_Rx sigma lambda^2 / ((4 pi)^3 R^4 f_c^2).
/// Only ratios at a fixed carrier are meaningful downstream.
double rx_power(const LinkBudget& budget, const OfdmConfig& cfg, const Target& target);

/// Per-target complex echo amplitudes. Magnitudes are sqrt(rx_power) scaled so
/// the strongest target has magnitude 1; phases are uniform in [0, 2 pi) and
/// drawn from `seed`.
std::vector<cplx> echo_amplitudes(const LinkBudget& budget, const OfdmConfig& cfg,
                                  std::span<const Target> targets, std::uint64_t seed);

SymbolMatrix synthesize_grid(const OfdmConfig& cfg, std::span<const Target> targets,
                             std::span<const cplx> amps, const NoiseSpec& noise = {});

DiagonalVector synthesize_diag(const OfdmConfig& cfg, std::span<const Target> targets,
                               std::span<const cplx> amps, const NoiseSpec& noise = {},
                               DiagonalModel model = DiagonalModel::DualTone);

/// Adds circular complex Gaussian noise with per-sample variance
/// signal_amplitude^2 / 10^(snr_db/10). Identity when snr_db is absent.
void add_awgn(std::span<cplx> values, double signal_amplitude, const NoiseSpec& noise);

/// splitmix64 finalizer, used to derive independent per-frame streams from one seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace jcas
