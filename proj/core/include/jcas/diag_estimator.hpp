// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "jcas/channel.hpp"
#include "jcas/dft.hpp"
#include "jcas/ofdm_config.hpp"

namespace jcas {

enum class WindowKind { Rectangular, Hamming };

std::string_view to_string(WindowKind kind);

/// w(k) = 0.54 - 0.46 cos(2 pi k / (n - 1)) for Hamming, 1 for Rectangular.
std::vector<double> window_coefficients(WindowKind kind, std::size_t n);

DiagonalVector apply_window(const DiagonalVector& d, WindowKind kind);

/// Distance from the mainlobe peak to its first null, in DFT bins (1 for
/// Rectangular, 2 for Hamming).
std::size_t mainlobe_halfwidth(WindowKind kind);

/// Normalized |DFT| of the diagonal vector in dB, max = 0 dB.
///
/// With oversample > 1 the vector is zero-padded to oversample * N points so
/// image bin i sits at DFT bin i / oversample. The estimator itself always runs
/// with oversample = 1; padding is only used to resolve sidelobe peaks for PSL.
struct RadarImage {
    std::vector<double> magnitude_db;
    std::size_t oversample = 1;

    std::size_t size() const { return magnitude_db.size(); }
};

RadarImage diag_spectrum(const DiagonalVector& d, TransformPath path = TransformPath::Fast,
                         std::size_t oversample = 1);

struct Peak {
    std::size_t bin = 0;
    double magnitude_db = 0.0;
};

/// Circular local maxima at or above threshold_db, thinned greedily so that no
/// two survivors are closer than min_separation bins; strongest first.
std::vector<Peak> detect_peaks_1d(const RadarImage& img, double threshold_db, std::size_t min_separation);

/// Peak-to-sidelobe level in dB: highest cell outside the mainlobes minus the
/// global max. Mainlobes are the global max and any peak within 3 dB of it,
/// each extending halfwidth image bins either side.
double psl(const RadarImage& img, std::size_t halfwidth);

/// Same, with explicit mainlobe centres.
double psl(const RadarImage& img, std::size_t halfwidth, std::span<const std::size_t> mainlobe_centres);

struct PeakPair {
    std::size_t l1 = 0; // l1 < l2
    std::size_t l2 = 0;
    double magnitude_db = 0.0; // mean of the two members
};

struct Pairing {
    std::vector<PeakPair> pairs;
    std::vector<Peak> orphans; // strongest first
};

/// Greedy amplitude matching: repeatedly pairs the two unpaired peaks whose
/// magnitudes are closest, while that gap stays within amp_tolerance_db.
Pairing pair_peaks(std::span<const Peak> peaks, double amp_tolerance_db);

/// The two readings of one dual-peak pair. In `a` the mean bin carries range
/// and the bin difference carries velocity; `b` swaps the roles.
struct CandidatePair {
    RangeVelocity a;
    RangeVelocity b;
};

CandidatePair candidates(const OfdmConfig& cfg, const PeakPair& pair);

/// Forward bin map of the dual-tone model: (|l_R - l_D|, l_R + l_D).
std::pair<double, double> dual_peak_bins(const OfdmConfig& cfg, const RangeVelocity& rv);

} // namespace jcas
