// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "jcas/types.hpp"

namespace jcas {

/// Floor for magnitudes that are exactly zero, so every dB value stays finite.
inline constexpr double kDbFloor = -300.0;

/// 20 log10(|x| / max|x|), floored at kDbFloor. An all-zero input maps to 0 dB everywhere.
std::vector<double> normalized_db(std::span<const cplx> values);

} // namespace jcas
