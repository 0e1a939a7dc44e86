// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

#include "jcas/ofdm_config.hpp"

namespace jcas {

enum class AllocationKind { Grid, Diagonal };

std::string_view to_string(AllocationKind kind);

/// One (subcarrier, OFDM symbol) cell of the block.
struct ResourceElement {
    std::size_t subcarrier = 0;
    std::size_t symbol = 0;

    friend auto operator<=>(const ResourceElement&, const ResourceElement&) = default;
};

/// Sensing resource elements of one block, stored as index pairs.
///
/// Everything not listed carries communication payload. Grid entries are
/// row-major over (frequency, time); diagonal entries ascend in k.
class Allocation {
public:
    Allocation(AllocationKind kind, std::vector<ResourceElement> entries, OfdmConfig cfg);

    AllocationKind kind() const { return kind_; }
    const std::vector<ResourceElement>& entries() const { return entries_; }
    const OfdmConfig& config() const { return cfg_; }

private:
    AllocationKind kind_;
    std::vector<ResourceElement> entries_;
    OfdmConfig cfg_;
};

Allocation build_allocation(const OfdmConfig& cfg, AllocationKind kind);

/// Fraction of the N_c x N_sym block used for sensing.
double overhead(const Allocation& alloc);

} // namespace jcas
