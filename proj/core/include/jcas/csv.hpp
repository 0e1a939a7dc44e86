// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace jcas {

/// Six significant digits, '.' decimal separator regardless of locale.
std::string format_number(double value);

} // namespace jcas
