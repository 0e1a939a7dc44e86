// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace jcas {

/// Raised when an OfdmConfig or a scene/config file violates its invariants.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for physically meaningless inputs such as a target at zero range.
class DegenerateInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace jcas
