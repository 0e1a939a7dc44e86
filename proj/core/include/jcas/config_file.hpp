// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jcas/ofdm_config.hpp"

namespace jcas {

// Minimal reader for the TOML subset used by scene and OFDM config files:
// [table] and [[array-of-tables]] headers, `key = value` lines with numbers,
// "strings", true/false or flat [number, ...] lists, and # comments.

using ConfigValue = std::variant<double, std::string, bool, std::vector<double>>;

struct ConfigSection {
    std::string name;         // empty for keys before the first header
    bool array_item = false;  // declared with [[name]]
    std::size_t line = 0;
    std::map<std::string, ConfigValue> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    double number(const std::string& key) const;
    std::size_t count(const std::string& key) const;
    std::string text(const std::string& key) const;
    std::vector<double> numbers(const std::string& key) const;
};

struct ConfigDocument {
    std::vector<ConfigSection> sections;

    const ConfigSection* find(std::string_view name) const;
    std::vector<const ConfigSection*> all(std::string_view name) const;
};

ConfigDocument parse_config(std::string_view text);
ConfigDocument load_config(const std::filesystem::path& path);

/// Applies an optional [ofdm] section on top of `base`. Unknown keys are errors.
OfdmConfig ofdm_config_from(const ConfigDocument& doc, OfdmConfig base = {});

} // namespace jcas
