// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jcas/types.hpp"

namespace jcas {

/// Forward: X[l] = sum_k x[k] exp(-j 2 pi k l / n), unscaled.
/// Inverse: x[k] = (1/n) sum_l X[l] exp(+j 2 pi k l / n).
enum class Direction { Forward, Inverse };

/// Naive is the O(n^2) direct sum and the only path that counts multiplies.
/// Fast goes through FFTW and agrees with Naive to rounding.
enum class TransformPath { Naive, Fast };

/// Complex-multiply tally for the naive kernels. Owned by one caller; not shared across threads.
struct OpCounter {
    std::uint64_t complex_multiplies = 0;
};

/// Length-n transform. `in` and `out` may alias. The 1/n scale of the inverse
/// is a real scaling and is not counted.
void dft(std::span<const cplx> in, std::span<cplx> out, Direction dir,
         TransformPath path = TransformPath::Fast, OpCounter* counter = nullptr);

std::vector<cplx> dft(std::span<const cplx> in, Direction dir,
                      TransformPath path = TransformPath::Fast, OpCounter* counter = nullptr);

} // namespace jcas
