// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jcas/channel.hpp"
#include "jcas/waveform.hpp"

namespace jcas::cli {

enum class WindowMode { Rect, Hamming, Adaptive };
enum class EstimatorMode { Diag, Grid2d, Both };

struct RunConfig {
    std::string scene = "fig4"; // builtin name or path to a scene file
    std::string ofdm_config;    // optional [ofdm] file, overrides the scene file's section
    WindowMode window = WindowMode::Rect;
    DiagonalModel model = DiagonalModel::DualTone;
    EstimatorMode estimator = EstimatorMode::Diag;
    NoiseSpec noise;
    LinkBudget budget;
    std::filesystem::path out_dir = ".";
    std::optional<double> threshold_db; // default: -30 dB rect, -40 dB hamming
    std::size_t min_separation = 3;
    double pair_tolerance_db = 4.0; // above the 3.92 dB rectangular scalloping loss
};

/// Default detection threshold for a window: just above its peak sidelobe level.
double default_threshold_db(WindowMode window);

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_capabilities(const std::string& ofdm_config, std::ostream& out, std::ostream& err);

struct BenchArgs {
    std::vector<std::size_t> sizes{64, 128, 256};
    std::size_t repeats = 5;
    bool counted_only = false;
    bool with_fast = false;
    std::optional<std::filesystem::path> out_dir;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);
int cmd_allocation(AllocationKind kind, const std::string& ofdm_config, const std::filesystem::path& out_file,
                   std::ostream& out, std::ostream& err);

/// Full command-line entry point: `jcas simulate|capabilities|bench|allocation [flags]`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace jcas::cli
