// SPDX-License-Identifier: Apache-2.0
#include "jcas/config_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "jcas/error.hpp"

namespace jcas {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what)
{
    throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

std::string_view strip_comment(std::string_view s)
{
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') {
            quoted = !quoted;
        } else if (s[i] == '#' && !quoted) {
            return s.substr(0, i);
        }
    }
    return s;
}

bool parse_number(std::string_view s, double& out)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, out);
    return res.ec == std::errc{} && res.ptr == end && std::isfinite(out);
}

ConfigValue parse_value(std::string_view raw, std::size_t line)
{
    const auto s = trim(raw);
    if (s.empty()) {
        fail(line, "missing value");
    }
    if (s.front() == '"') {
        if (s.size() < 2 || s.back() != '"') {
            fail(line, "unterminated string");
        }
        return std::string(s.substr(1, s.size() - 2));
    }
    if (s == "true" || s == "false") {
        return s == "true";
    }
    if (s.front() == '[') {
        if (s.back() != ']') {
            fail(line, "unterminated list");
        }
        std::vector<double> list;
        auto body = trim(s.substr(1, s.size() - 2));
        while (!body.empty()) {
            const auto comma = body.find(',');
            const auto item = trim(body.substr(0, comma));
            if (!item.empty()) {
                double v = 0.0;
                if (!parse_number(item, v)) {
                    fail(line, "list entries must be numbers");
                }
                list.push_back(v);
            }
            if (comma == std::string_view::npos) {
                break;
            }
            body = body.substr(comma + 1);
        }
        return list;
    }
    double v = 0.0;
    if (!parse_number(s, v)) {
        fail(line, "cannot parse value '" + std::string(s) + "'");
    }
    return v;
}

template <typename T>
const T& typed(const ConfigSection& sec, const std::string& key, const char* kind)
{
    const auto it = sec.values.find(key);
    if (it == sec.values.end()) {
        fail(sec.line, "[" + sec.name + "] is missing '" + key + "'");
    }
    const T* v = std::get_if<T>(&it->second);
    if (v == nullptr) {
        fail(sec.line, "'" + key + "' must be a " + kind);
    }
    return *v;
}

} // namespace

double ConfigSection::number(const std::string& key) const
{
    return typed<double>(*this, key, "number");
}

std::size_t ConfigSection::count(const std::string& key) const
{
    const double v = number(key);
    if (v < 0.0 || v != std::floor(v)) {
        fail(line, "'" + key + "' must be a non-negative integer");
    }
    return static_cast<std::size_t>(v);
}

std::string ConfigSection::text(const std::string& key) const
{
    return typed<std::string>(*this, key, "string");
}

std::vector<double> ConfigSection::numbers(const std::string& key) const
{
    return typed<std::vector<double>>(*this, key, "list of numbers");
}

const ConfigSection* ConfigDocument::find(std::string_view name) const
{
    for (const auto& s : sections) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

std::vector<const ConfigSection*> ConfigDocument::all(std::string_view name) const
{
    std::vector<const ConfigSection*> out;
    for (const auto& s : sections) {
        if (s.name == name) {
            out.push_back(&s);
        }
    }
    return out;
}

ConfigDocument parse_config(std::string_view text)
{
    ConfigDocument doc;
    doc.sections.push_back({});
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        const auto line = trim(strip_comment(text.substr(0, nl)));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty()) {
            continue;
        }

        if (line.front() == '[') {
            const bool array_item = line.starts_with("[[");
            const std::size_t open = array_item ? 2 : 1;
            if (line.size() <= 2 * open || line.substr(line.size() - open) != (array_item ? "]]" : "]")) {
                fail(line_no, "malformed section header");
            }
            const auto name = trim(line.substr(open, line.size() - 2 * open));
            if (name.empty()) {
                fail(line_no, "empty section name");
            }
            if (!array_item && doc.find(name) != nullptr) {
                fail(line_no, "duplicate section [" + std::string(name) + "]");
            }
            doc.sections.push_back({std::string(name), array_item, line_no, {}});
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(line_no, "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty()) {
            fail(line_no, "empty key");
        }
        auto& sec = doc.sections.back();
        if (sec.values.count(key) != 0) {
            fail(line_no, "duplicate key '" + key + "'");
        }
        sec.values.emplace(key, parse_value(line.substr(eq + 1), line_no));
    }
    return doc;
}

ConfigDocument load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

OfdmConfig ofdm_config_from(const ConfigDocument& doc, OfdmConfig base)
{
    const auto* sec = doc.find("ofdm");
    if (sec == nullptr) {
        base.validate();
        return base;
    }
    for (const auto& [key, value] : sec->values) {
        if (key == "carrier_freq_hz") {
            base.carrier_freq = sec->number(key);
        } else if (key == "subcarrier_spacing_hz") {
            base.subcarrier_spacing = sec->number(key);
        } else if (key == "n_subcarriers") {
            base.n_subcarriers = sec->count(key);
        } else if (key == "n_symbols") {
            base.n_symbols = sec->count(key);
        } else if (key == "n_sensing_freq") {
            base.n_sensing_freq = sec->count(key);
        } else if (key == "n_sensing_time") {
            base.n_sensing_time = sec->count(key);
        } else if (key == "n_diag") {
            base.n_diag = sec->count(key);
        } else if (key == "block_duration_s") {
            base.block_duration = sec->number(key);
        } else if (key == "symbol_duration_s") {
            base.symbol_duration_physical = sec->number(key);
        } else if (key == "speed_of_light_mps") {
            base.speed_of_light = sec->number(key);
        } else {
            fail(sec->line, "unknown [ofdm] key '" + key + "'");
        }
    }
    base.validate();
    return base;
}

} // namespace jcas
