// SPDX-License-Identifier: Apache-2.0
#include "jcas/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "jcas/channel.hpp"
#include "jcas/csv.hpp"
#include "jcas/dft.hpp"
#include "jcas/grid_estimator.hpp"

namespace jcas {

std::string format_number(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    std::string s(buf);
    std::replace(s.begin(), s.end(), ',', '.');
    return s;
}

namespace {

SymbolMatrix random_matrix(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    SymbolMatrix m(n, n);
    for (auto& v : m.values()) {
        v = {static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5, static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5};
    }
    return m;
}

std::vector<cplx> random_vector(std::size_t n, std::uint64_t seed)
{
    const auto m = random_matrix(n, seed);
    return {m.row(0).begin(), m.row(0).end()};
}

std::uint64_t run_once(Algorithm alg, const SymbolMatrix& grid_input, std::span<const cplx> diag_input,
                       TransformPath path, bool count)
{
    OpCounter counter;
    OpCounter* c = count ? &counter : nullptr;
    if (alg == Algorithm::Grid2d) {
        const auto out = range_doppler_spectrum(grid_input, path, c);
        static_cast<void>(out);
    } else {
        const auto out = dft(diag_input, Direction::Forward, path, c);
        static_cast<void>(out);
    }
    return counter.complex_multiplies;
}

template <typename F>
double median_ns(std::size_t repeats, F&& fn)
{
    std::vector<double> samples;
    samples.reserve(repeats);
    for (std::size_t r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    return samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

} // namespace

std::string_view to_string(Algorithm alg)
{
    return alg == Algorithm::Grid2d ? "grid2d" : "diag";
}

OpCount count_ops(Algorithm alg, std::size_t n)
{
    if (n < 2) {
        throw std::invalid_argument("count_ops: n must be at least 2");
    }
    const auto grid = alg == Algorithm::Grid2d ? random_matrix(n, n) : SymbolMatrix{};
    const auto diag = alg == Algorithm::Diag ? random_vector(n, n) : std::vector<cplx>{};
    const std::uint64_t counted = run_once(alg, grid, diag, TransformPath::Naive, true);
    const std::string label = alg == Algorithm::Grid2d ? "naive row DFT + column IDFT" : "naive 1D DFT";
    return {counted, label, n};
}

BenchReport run_bench(std::span<const std::size_t> sizes, const BenchOptions& options)
{
    if (options.repeats < 3) {
        throw std::invalid_argument("run_bench: repeats must be at least 3");
    }
    for (std::size_t n : sizes) {
        if (n < 2) {
            throw std::invalid_argument("run_bench: sizes must be at least 2");
        }
    }

    BenchReport report;
    for (std::size_t n : sizes) {
        const auto grid = random_matrix(n, options.seed + n);
        const auto diag = random_vector(n, options.seed + n + 1);

        double times[2] = {0.0, 0.0};
        std::uint64_t counts[2] = {0, 0};
        for (Algorithm alg : {Algorithm::Grid2d, Algorithm::Diag}) {
            const auto idx = static_cast<std::size_t>(alg);
            counts[idx] = run_once(alg, grid, diag, TransformPath::Naive, true);
            if (counts[idx] != count_ops(alg, n).complex_multiplies) {
                throw std::logic_error("run_bench: counted multiplies disagree with count_ops");
            }
            if (options.timed) {
                times[idx] = median_ns(options.repeats,
                                       [&] { run_once(alg, grid, diag, TransformPath::Naive, false); });
            }
            report.rows.push_back({std::string(to_string(alg)), n, counts[idx], times[idx]});
        }
        if (options.include_fast) {
            for (Algorithm alg : {Algorithm::Grid2d, Algorithm::Diag}) {
                const double t = options.timed ? median_ns(options.repeats, [&] {
                    run_once(alg, grid, diag, TransformPath::Fast, false);
                }) : 0.0;
                report.rows.push_back({std::string(to_string(alg)) + "_fft", n, 0, t});
            }
        }
        report.ratios.push_back({n, static_cast<double>(counts[0]) / static_cast<double>(counts[1]),
                                 options.timed && times[1] > 0.0 ? times[0] / times[1] : 0.0});
    }
    return report;
}

std::string format_table(const BenchReport& report)
{
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %8s %20s %16s\n", "algorithm", "n", "counted_multiplies", "wall_time_ns");
    out += line;
    for (const auto& r : report.rows) {
        std::snprintf(line, sizeof line, "%-12s %8zu %20llu %16s\n", r.algorithm.c_str(), r.n,
                      static_cast<unsigned long long>(r.counted_multiplies), format_number(r.wall_time_ns).c_str());
        out += line;
    }
    for (const auto& q : report.ratios) {
        std::snprintf(line, sizeof line, "n=%zu  ratio_counted=%s  ratio_time=%s\n", q.n,
                      format_number(q.counted).c_str(), format_number(q.time).c_str());
        out += line;
    }
    return out;
}

std::string format_csv(const BenchReport& report)
{
    std::string out = "algorithm,n,counted_multiplies,wall_time_ns\n";
    for (const auto& r : report.rows) {
        out += r.algorithm + ',' + std::to_string(r.n) + ',' + std::to_string(r.counted_multiplies) + ',' +
               format_number(r.wall_time_ns) + '\n';
    }
    return out;
}

} // namespace jcas
