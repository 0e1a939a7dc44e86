// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "jcas/channel.hpp"
#include "jcas/dft.hpp"
#include "jcas/ofdm_config.hpp"

namespace jcas {

/// Normalized |2D spectrum| in dB; rows are range bins p, columns Doppler bins q.
struct RangeDopplerMap {
    std::size_t n_range = 0;
    std::size_t n_doppler = 0;
    std::vector<double> magnitude_db; // row-major, max = 0 dB

    double at(std::size_t p, std::size_t q) const { return magnitude_db[p * n_doppler + q]; }
};

struct GridDetection {
    std::size_t range_bin = 0;   // p
    std::size_t doppler_bin = 0; // q
    double magnitude_db = 0.0;
    double range = 0.0;
    double velocity = 0.0;
};

/// Row-by-row length-N_t forward DFTs (Doppler).
SymbolMatrix doppler_pass(const SymbolMatrix& c, TransformPath path = TransformPath::Fast,
                          OpCounter* counter = nullptr);

/// Column-by-column length-N_f inverse DFTs with 1/N_f scaling (range).
SymbolMatrix range_pass(const SymbolMatrix& c, TransformPath path = TransformPath::Fast,
                        OpCounter* counter = nullptr);

/// range_pass(doppler_pass(c)). Energy scales by N_t / N_f under this normalization.
SymbolMatrix range_doppler_spectrum(const SymbolMatrix& c, TransformPath path = TransformPath::Fast,
                                    OpCounter* counter = nullptr);

RangeDopplerMap range_doppler_map(const SymbolMatrix& c, TransformPath path = TransformPath::Fast);

/// Cells at or above threshold_db that strictly exceed every other cell of the
/// (2 guard + 1)^2 window around them (indices wrap), strongest first.
std::vector<GridDetection> detect_peaks_2d(const OfdmConfig& cfg, const RangeDopplerMap& map,
                                           double threshold_db, std::size_t guard);

/// Integer bins to (R, v). No interpolation is applied.
RangeVelocity bins_to_estimate(const OfdmConfig& cfg, std::size_t p, std::size_t q);

} // namespace jcas
