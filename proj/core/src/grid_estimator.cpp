// SPDX-License-Identifier: Apache-2.0
#include "jcas/grid_estimator.hpp"

#include <algorithm>
#include <stdexcept>

#include "jcas/spectrum.hpp"

namespace jcas {

SymbolMatrix doppler_pass(const SymbolMatrix& c, TransformPath path, OpCounter* counter)
{
    SymbolMatrix out(c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i) {
        dft(c.row(i), out.row(i), Direction::Forward, path, counter);
    }
    return out;
}

SymbolMatrix range_pass(const SymbolMatrix& c, TransformPath path, OpCounter* counter)
{
    SymbolMatrix out(c.rows(), c.cols());
    std::vector<cplx> column(c.rows());
    std::vector<cplx> spectrum(c.rows());
    for (std::size_t j = 0; j < c.cols(); ++j) {
        for (std::size_t i = 0; i < c.rows(); ++i) {
            column[i] = c(i, j);
        }
        dft(column, spectrum, Direction::Inverse, path, counter);
        for (std::size_t i = 0; i < c.rows(); ++i) {
            out(i, j) = spectrum[i];
        }
    }
    return out;
}

SymbolMatrix range_doppler_spectrum(const SymbolMatrix& c, TransformPath path, OpCounter* counter)
{
    return range_pass(doppler_pass(c, path, counter), path, counter);
}

RangeDopplerMap range_doppler_map(const SymbolMatrix& c, TransformPath path)
{
    const auto spectrum = range_doppler_spectrum(c, path);
    return {c.rows(), c.cols(), normalized_db(spectrum.values())};
}

std::vector<GridDetection> detect_peaks_2d(const OfdmConfig& cfg, const RangeDopplerMap& map,
                                           double threshold_db, std::size_t guard)
{
    if (!(threshold_db < 0.0)) {
        throw std::invalid_argument("detect_peaks_2d: threshold_db must be negative");
    }
    if (guard < 1) {
        throw std::invalid_argument("detect_peaks_2d: guard must be at least 1");
    }

    const std::size_t np = map.n_range;
    const std::size_t nq = map.n_doppler;
    const auto g = static_cast<std::ptrdiff_t>(guard);
    std::vector<GridDetection> out;
    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t q = 0; q < nq; ++q) {
            const double v = map.at(p, q);
            if (v < threshold_db) {
                continue;
            }
            bool is_max = true;
            for (std::ptrdiff_t dp = -g; dp <= g && is_max; ++dp) {
                for (std::ptrdiff_t dq = -g; dq <= g; ++dq) {
                    if (dp == 0 && dq == 0) {
                        continue;
                    }
                    const auto pp = static_cast<std::size_t>((static_cast<std::ptrdiff_t>(p) + dp) %
                                                                 static_cast<std::ptrdiff_t>(np) + np) % np;
                    const auto qq = static_cast<std::size_t>((static_cast<std::ptrdiff_t>(q) + dq) %
                                                                 static_cast<std::ptrdiff_t>(nq) + nq) % nq;
                    if ((pp != p || qq != q) && map.at(pp, qq) >= v) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max) {
                const auto est = bins_to_estimate(cfg, p, q);
                out.push_back({p, q, v, est.range, est.velocity});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const GridDetection& a, const GridDetection& b) { return a.magnitude_db > b.magnitude_db; });
    return out;
}

RangeVelocity bins_to_estimate(const OfdmConfig& cfg, std::size_t p, std::size_t q)
{
    if (p >= cfg.n_sensing_freq || q >= cfg.n_sensing_time) {
        throw std::out_of_range("bins_to_estimate: bin index outside the range-Doppler map");
    }
    const double c = cfg.speed_of_light;
    const double lf = static_cast<double>(cfg.freq_spacing());
    const double lt = static_cast<double>(cfg.time_spacing());
    return {
        c * static_cast<double>(p) / (2.0 * lf * cfg.subcarrier_spacing * static_cast<double>(cfg.n_sensing_freq)),
        c * static_cast<double>(q) /
            (2.0 * cfg.carrier_freq * lt * cfg.useful_symbol_duration() * static_cast<double>(cfg.n_sensing_time)),
    };
}

} // namespace jcas
