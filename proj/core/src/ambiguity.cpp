// SPDX-License-Identifier: Apache-2.0
#include "jcas/ambiguity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jcas {

namespace {

struct Nearest {
    std::size_t index = 0;
    double distance = std::numeric_limits<double>::infinity();
};

Nearest nearest_pair(const OfdmConfig& cfg, const RangeVelocity& predicted, std::span<const PeakPair> pairs)
{
    const auto [lo, hi] = dual_peak_bins(cfg, predicted);
    Nearest best;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        const double d = std::abs(lo - static_cast<double>(pairs[j].l1)) +
                         std::abs(hi - static_cast<double>(pairs[j].l2));
        if (d < best.distance) {
            best = {j, d};
        }
    }
    return best;
}

} // namespace

std::string_view to_string(Branch b)
{
    switch (b) {
    case Branch::A:
        return "a";
    case Branch::B:
        return "b";
    default:
        return "undecided";
    }
}

RangeVelocity Hypothesis::state_at(Branch branch, double time) const
{
    if (history.empty() || branch == Branch::Undecided) {
        throw std::logic_error("Hypothesis::state_at needs an observation and a concrete branch");
    }
    const auto& first = history.front();
    const RangeVelocity origin = branch == Branch::A ? first.candidates.a : first.candidates.b;
    return {origin.range + origin.velocity * (time - first.time), origin.velocity};
}

std::optional<RangeVelocity> Hypothesis::resolved_at(double time) const
{
    if (chosen == Branch::Undecided) {
        return std::nullopt;
    }
    return state_at(chosen, time);
}

AmbiguityResolver::AmbiguityResolver(OfdmConfig cfg, double frame_interval, ResolverSettings settings)
    : cfg_(std::move(cfg)), frame_interval_(frame_interval), settings_(settings)
{
    cfg_.validate_diagonal();
    if (!(frame_interval_ > 0.0)) {
        throw std::invalid_argument("AmbiguityResolver: frame_interval must be positive");
    }
    min_range_ = capabilities(cfg_).range_resolution;
}

std::vector<std::uint32_t> AmbiguityResolver::update(double time, std::span<const PeakPair> pairs)
{
    if (last_time_) {
        if (!(time > *last_time_)) {
            throw std::invalid_argument("AmbiguityResolver: frame times must be strictly increasing");
        }
        if (time - *last_time_ < frame_interval_ * (1.0 - 1e-9)) {
            throw std::invalid_argument("AmbiguityResolver: frames closer than one frame interval");
        }
    }
    last_time_ = time;

    constexpr std::uint32_t kUnassigned = 0;
    std::vector<std::uint32_t> owner(pairs.size(), kUnassigned);
    std::vector<double> owner_distance(pairs.size(), std::numeric_limits<double>::infinity());

    for (auto& track : tracks_) {
        Nearest near_a;
        Nearest near_b;
        if (track.a_valid) {
            near_a = nearest_pair(cfg_, track.state_at(Branch::A, time), pairs);
        }
        if (track.b_valid) {
            near_b = nearest_pair(cfg_, track.state_at(Branch::B, time), pairs);
        }
        const Nearest& best = near_a.distance <= near_b.distance ? near_a : near_b;
        if (!(best.distance <= settings_.gate_bins)) {
            continue;
        }

        if (track.a_valid) {
            track.score_a += near_a.distance;
        }
        if (track.b_valid) {
            track.score_b += near_b.distance;
        }
        const PeakPair& obs = pairs[best.index];
        track.history.push_back({time, obs, candidates(cfg_, obs)});
        if (best.distance < owner_distance[best.index]) {
            owner[best.index] = track.track_id;
            owner_distance[best.index] = best.distance;
        }

        if (track.history.size() >= 2) {
            if (track.a_valid && !track.b_valid) {
                track.chosen = Branch::A;
            } else if (track.b_valid && !track.a_valid) {
                track.chosen = Branch::B;
            } else if (track.a_valid && track.b_valid) {
                const double margin = track.score_b - track.score_a;
                if (margin > settings_.decision_margin_bins) {
                    track.chosen = Branch::A;
                } else if (-margin > settings_.decision_margin_bins) {
                    track.chosen = Branch::B;
                } else {
                    track.chosen = Branch::Undecided;
                }
            }
        }
    }

    for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (owner[j] != kUnassigned) {
            continue;
        }
        Hypothesis track;
        track.track_id = next_id_++;
        const auto cand = candidates(cfg_, pairs[j]);
        track.history.push_back({time, pairs[j], cand});
        track.a_valid = cand.a.range >= min_range_;
        track.b_valid = cand.b.range >= min_range_;
        owner[j] = track.track_id;
        tracks_.push_back(std::move(track));
    }
    return owner;
}

} // namespace jcas
