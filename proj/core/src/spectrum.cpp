// SPDX-License-Identifier: Apache-2.0
#include "jcas/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace jcas {

std::vector<double> normalized_db(std::span<const cplx> values)
{
    std::vector<double> mag(values.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        mag[i] = std::abs(values[i]);
        peak = std::max(peak, mag[i]);
    }
    for (auto& m : mag) {
        if (peak == 0.0) {
            m = 0.0;
        } else if (m == 0.0) {
            m = kDbFloor;
        } else {
            m = std::max(kDbFloor, 20.0 * std::log10(m / peak));
        }
    }
    return mag;
}

} // namespace jcas
