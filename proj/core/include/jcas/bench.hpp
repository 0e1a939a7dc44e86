// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jcas {

enum class Algorithm { Grid2d, Diag };

std::string_view to_string(Algorithm alg);

struct OpCount {
    std::uint64_t complex_multiplies = 0;
    std::string transform_label;
    std::size_t n = 0;
};

/// Runs the instrumented naive estimator on an n-sized synthetic input and
/// returns the counted complex multiplies: n row DFTs plus n column IDFTs for
/// grid2d (2 n^3), one length-n DFT for diag (n^2).
OpCount count_ops(Algorithm alg, std::size_t n);

struct BenchRow {
    std::string algorithm;
    std::size_t n = 0;
    std::uint64_t counted_multiplies = 0; // 0 for the FFT rows
    double wall_time_ns = 0.0;            // median over repeats; 0 when untimed
};

struct BenchRatio {
    std::size_t n = 0;
    double counted = 0.0; // grid2d / diag
    double time = 0.0;    // grid2d / diag, 0 when untimed
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<BenchRatio> ratios;
};

struct BenchOptions {
    std::size_t repeats = 5;
    bool timed = true;
    bool include_fast = false; // supplementary FFTW rows, never part of the ratios
    std::uint64_t seed = 0;
};

/// Single-threaded. Throws std::invalid_argument when repeats < 3 or any size < 2.
BenchReport run_bench(std::span<const std::size_t> sizes, const BenchOptions& options = {});

std::string format_table(const BenchReport& report);
std::string format_csv(const BenchReport& report);

} // namespace jcas
