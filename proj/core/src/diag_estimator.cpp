// SPDX-License-Identifier: Apache-2.0
#include "jcas/diag_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "jcas/spectrum.hpp"

namespace jcas {

namespace {

std::size_t circular_distance(std::size_t a, std::size_t b, std::size_t n)
{
    const std::size_t d = a > b ? a - b : b - a;
    return std::min(d, n - d);
}

} // namespace

std::string_view to_string(WindowKind kind)
{
    return kind == WindowKind::Hamming ? "hamming" : "rect";
}

std::vector<double> window_coefficients(WindowKind kind, std::size_t n)
{
    std::vector<double> w(n, 1.0);
    if (kind == WindowKind::Hamming && n >= 2) {
        const double denom = static_cast<double>(n - 1);
        for (std::size_t k = 0; k < n; ++k) {
            w[k] = 0.54 - 0.46 * std::cos(2.0 * kPi * static_cast<double>(k) / denom);
        }
    }
    return w;
}

DiagonalVector apply_window(const DiagonalVector& d, WindowKind kind)
{
    if (d.values.size() < 2) {
        throw std::invalid_argument("apply_window: need at least two samples");
    }
    const auto w = window_coefficients(kind, d.values.size());
    DiagonalVector out = d;
    for (std::size_t k = 0; k < w.size(); ++k) {
        out.values[k] *= w[k];
    }
    return out;
}

std::size_t mainlobe_halfwidth(WindowKind kind)
{
    return kind == WindowKind::Hamming ? 2 : 1;
}

RadarImage diag_spectrum(const DiagonalVector& d, TransformPath path, std::size_t oversample)
{
    if (oversample < 1) {
        throw std::invalid_argument("diag_spectrum: oversample must be at least 1");
    }
    std::vector<cplx> padded(d.values.size() * oversample);
    std::copy(d.values.begin(), d.values.end(), padded.begin());
    dft(padded, padded, Direction::Forward, path);
    return {normalized_db(padded), oversample};
}

std::vector<Peak> detect_peaks_1d(const RadarImage& img, double threshold_db, std::size_t min_separation)
{
    if (!(threshold_db < 0.0)) {
        throw std::invalid_argument("detect_peaks_1d: threshold_db must be negative");
    }
    if (min_separation < 1) {
        throw std::invalid_argument("detect_peaks_1d: min_separation must be at least 1");
    }
    const auto& m = img.magnitude_db;
    const std::size_t n = m.size();
    std::vector<Peak> local;
    if (n < 3) {
        return local;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double prev = m[(i + n - 1) % n];
        const double next = m[(i + 1) % n];
        if (m[i] >= threshold_db && m[i] > prev && m[i] > next) {
            local.push_back({i, m[i]});
        }
    }
    std::stable_sort(local.begin(), local.end(),
                     [](const Peak& a, const Peak& b) { return a.magnitude_db > b.magnitude_db; });

    std::vector<Peak> kept;
    for (const auto& p : local) {
        const bool clear = std::none_of(kept.begin(), kept.end(), [&](const Peak& k) {
            return circular_distance(k.bin, p.bin, n) < min_separation;
        });
        if (clear) {
            kept.push_back(p);
        }
    }
    return kept;
}

double psl(const RadarImage& img, std::size_t halfwidth)
{
    if (img.size() < 3) {
        throw std::invalid_argument("psl: image too short");
    }
    const auto [lo, hi] = std::minmax_element(img.magnitude_db.begin(), img.magnitude_db.end());
    if (*lo == *hi) {
        throw std::invalid_argument("psl: flat image has no mainlobe");
    }
    std::vector<std::size_t> centres{static_cast<std::size_t>(hi - img.magnitude_db.begin())};
    for (const auto& p : detect_peaks_1d(img, -3.0, 1)) {
        centres.push_back(p.bin);
    }
    return psl(img, halfwidth, centres);
}

double psl(const RadarImage& img, std::size_t halfwidth, std::span<const std::size_t> mainlobe_centres)
{
    if (halfwidth < 1) {
        throw std::invalid_argument("psl: halfwidth must be at least 1");
    }
    const auto& m = img.magnitude_db;
    const std::size_t n = m.size();
    const double peak = *std::max_element(m.begin(), m.end());
    double sidelobe = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const bool in_mainlobe = std::any_of(mainlobe_centres.begin(), mainlobe_centres.end(),
                                             [&](std::size_t c) { return circular_distance(c, i, n) <= halfwidth; });
        if (!in_mainlobe) {
            sidelobe = std::max(sidelobe, m[i]);
        }
    }
    if (!std::isfinite(sidelobe)) {
        throw std::invalid_argument("psl: mainlobes cover the whole image");
    }
    return sidelobe - peak;
}

Pairing pair_peaks(std::span<const Peak> peaks, double amp_tolerance_db)
{
    if (!(amp_tolerance_db > 0.0)) {
        throw std::invalid_argument("pair_peaks: tolerance must be positive");
    }
    std::vector<Peak> pool(peaks.begin(), peaks.end());
    Pairing result;
    while (pool.size() >= 2) {
        std::size_t bi = 0;
        std::size_t bj = 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                const double gap = std::abs(pool[i].magnitude_db - pool[j].magnitude_db);
                if (gap < best) {
                    best = gap;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best > amp_tolerance_db) {
            break;
        }
        const Peak& p = pool[bi];
        const Peak& q = pool[bj];
        result.pairs.push_back({std::min(p.bin, q.bin), std::max(p.bin, q.bin),
                                0.5 * (p.magnitude_db + q.magnitude_db)});
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(bj));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(bi));
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Peak& a, const Peak& b) { return a.magnitude_db > b.magnitude_db; });
    result.orphans = std::move(pool);
    return result;
}

CandidatePair candidates(const OfdmConfig& cfg, const PeakPair& pair)
{
    const double c = cfg.speed_of_light;
    const double l_mean = 0.5 * static_cast<double>(pair.l1 + pair.l2);
    const double l_delta = static_cast<double>(pair.l2) - static_cast<double>(pair.l1);
    // L_f * N and L_t * N are N_c and N_sym on a valid diagonal config.
    const double freq_span = static_cast<double>(cfg.freq_spacing() * cfg.n_diag);
    const double time_span = static_cast<double>(cfg.time_spacing() * cfg.n_diag);
    const double tu = cfg.useful_symbol_duration();
    const double fc = cfg.carrier_freq;
    const double df = cfg.subcarrier_spacing;

    CandidatePair out;
    out.a = {c * l_mean / (2.0 * df * freq_span), c * l_delta / (4.0 * tu * fc * time_span)};
    out.b = {c * l_delta / (4.0 * df * freq_span), c * l_mean / (2.0 * tu * fc * time_span)};
    return out;
}

std::pair<double, double> dual_peak_bins(const OfdmConfig& cfg, const RangeVelocity& rv)
{
    const auto bins = diag_bins(cfg, rv.range, rv.velocity);
    return {std::abs(bins.range_bin - bins.doppler_bin), bins.range_bin + bins.doppler_bin};
}

} // namespace jcas
