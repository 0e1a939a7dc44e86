// SPDX-License-Identifier: Apache-2.0
#include "jcas/waveform.hpp"

#include <utility>

#include "jcas/error.hpp"

namespace jcas {

std::string_view to_string(AllocationKind kind)
{
    return kind == AllocationKind::Grid ? "grid" : "diagonal";
}

Allocation::Allocation(AllocationKind kind, std::vector<ResourceElement> entries, OfdmConfig cfg)
    : kind_(kind), entries_(std::move(entries)), cfg_(std::move(cfg))
{
    for (const auto& re : entries_) {
        if (re.subcarrier >= cfg_.n_subcarriers || re.symbol >= cfg_.n_symbols) {
            throw ConfigError("allocation entry outside the resource block");
        }
    }
}

Allocation build_allocation(const OfdmConfig& cfg, AllocationKind kind)
{
    cfg.validate();
    const std::size_t lf = cfg.freq_spacing();
    const std::size_t lt = cfg.time_spacing();

    std::vector<ResourceElement> entries;
    if (kind == AllocationKind::Grid) {
        entries.reserve(cfg.n_sensing_freq * cfg.n_sensing_time);
        for (std::size_t i = 0; i < cfg.n_sensing_freq; ++i) {
            for (std::size_t j = 0; j < cfg.n_sensing_time; ++j) {
                entries.push_back({i * lf, j * lt});
            }
        }
    } else {
        cfg.validate_diagonal();
        entries.reserve(cfg.n_diag);
        for (std::size_t k = 0; k < cfg.n_diag; ++k) {
            entries.push_back({k * lf, k * lt});
        }
    }
    return Allocation(kind, std::move(entries), cfg);
}

double overhead(const Allocation& alloc)
{
    const auto& cfg = alloc.config();
    return static_cast<double>(alloc.entries().size()) /
           (static_cast<double>(cfg.n_subcarriers) * static_cast<double>(cfg.n_symbols));
}

} // namespace jcas
