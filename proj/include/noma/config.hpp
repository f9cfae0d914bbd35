#pragma once

#include "noma/scenario.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace noma {

/// A parsed configuration plus notes about defaults worth telling the user.
struct LoadedConfig {
    ScenarioConfig config;
    std::vector<std::string> notes;
};

/// Flat `key = value` text; `#` starts a comment. Omitted keys take the
/// defaults of ScenarioConfig. Throws ValidationError naming the key.
LoadedConfig parse_config(std::string_view text);

/// Reads and parses a file. Throws ValidationError (key "config") if the
/// file cannot be read.
LoadedConfig load_config(const std::filesystem::path& path);

/// Serializes every field as `key = value` lines that parse back exactly.
std::string format_config(const ScenarioConfig& cfg);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

/// Strict parse of a whole token; throws ValidationError(key, ...) on failure.
double parse_double(std::string_view key, std::string_view token);

/// Sets one field from its textual value. Returns false for unknown keys.
bool apply_config_key(ScenarioConfig& cfg, std::string_view key, std::string_view value);

Scheme parse_scheme(std::string_view key, std::string_view token);
KernelChoice parse_kernel(std::string_view key, std::string_view token);
LinkModel parse_link_model(std::string_view key, std::string_view token);

/// Splits "a, b ,c" into trimmed non-empty tokens.
std::vector<std::string_view> split_list(std::string_view text);

std::string_view trim(std::string_view s);

}  // namespace noma
