// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "jcas/diag_estimator.hpp"
#include "jcas/ofdm_config.hpp"

namespace jcas {

/// Which reading of a dual-peak pair a track has settled on.
enum class Branch { A, B, Undecided };

std::string_view to_string(Branch b);

struct TrackObservation {
    double time = 0.0;
    PeakPair pair;
    CandidatePair candidates;
};

/// One tracked object carrying both readings of its first pair.
///
/// Each reading is propagated at constant velocity from the first
/// observation and scored by the L1 bin distance between its predicted
/// dual-peak pair and the nearest observed pair. A reading whose range is below
/// one range cell is discarded on creation.
struct Hypothesis {
    std::uint32_t track_id = 0;
    Branch chosen = Branch::Undecided;
    std::vector<TrackObservation> history;
    double score_a = 0.0;
    double score_b = 0.0;
    bool a_valid = true;
    bool b_valid = true;

    RangeVelocity state_at(Branch branch, double time) const;
    /// State of the chosen reading at `time`; empty while undecided.
    std::optional<RangeVelocity> resolved_at(double time) const;
};

struct ResolverSettings {
    double gate_bins = 8.0;            // max L1 distance for a pair to join a track
    double decision_margin_bins = 2.0; // score gap needed to pick a reading
};

/// Frame-by-frame fusion of dual-peak pairs. Single writer: one owner calls
/// update() with strictly increasing frame times.
class AmbiguityResolver {
public:
    AmbiguityResolver(OfdmConfig cfg, double frame_interval, ResolverSettings settings = {});

    /// Associates this frame's pairs with existing tracks, updates scores and
    /// decisions, and opens a track for every pair no track claimed. Returns
    /// the track id assigned to each input pair.
    std::vector<std::uint32_t> update(double time, std::span<const PeakPair> pairs);

    const std::vector<Hypothesis>& tracks() const { return tracks_; }

private:
    OfdmConfig cfg_;
    double frame_interval_;
    ResolverSettings settings_;
    double min_range_;
    std::vector<Hypothesis> tracks_;
    std::uint32_t next_id_ = 1;
    std::optional<double> last_time_;
};

} // namespace jcas
