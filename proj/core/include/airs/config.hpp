// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "airs/sim.hpp"

namespace airs {

inline constexpr const char* kToolVersion = "0.1.0";

struct ParsedConfig {
    ScenarioConfig config;
    std::vector<std::string> warnings; ///< e.g. Lemma-1 infeasibility
};

/// Table-I defaults with linear fields resolved.
ScenarioConfig default_config();

/// Apply one `key=value` override (keys mirror the Table-I symbols; see README).
/// Throws ConfigError on unknown keys or malformed values.
void apply_config_key(ScenarioConfig& cfg, const std::string& key, const std::string& value);

/// Resolve derived fields (linear dB conversions, default spacings) and
/// validate. Throws ConfigError naming the offending field; fills warnings
/// for non-fatal issues (a grid beyond the Lemma-1 limit still runs).
ParsedConfig finalize_config(ScenarioConfig cfg);

/// key=value text, one per line; '#' starts a comment; blank lines ignored.
ParsedConfig parse_config_text(const std::string& text);

/// Same, from a file. Throws ConfigError when unreadable.
ParsedConfig parse_config_file(const std::string& path);

/// Manifest written next to outputs: the resolved scenario as a parseable
/// config plus commented run metadata. Re-running it reproduces the outputs.
std::string manifest_text(const ScenarioConfig& cfg, const std::string& command,
                          const std::string& out_dir, const std::string& timestamp);

std::string scheme_to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

} // namespace airs
