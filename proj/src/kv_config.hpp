// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nmeascene {

// Flat `key=value` files: one pair per line, '#' starts a comment, blank
// lines ignored, whitespace around keys and values trimmed.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Throws Error(ConfigError) naming the offending line.
KeyValues parse_key_values(std::string_view text);

/// Throws Error(ConfigError) unless the whole value is a finite number.
double config_number(std::string_view key, std::string_view value);

std::string read_text_file(const std::string& path);

}  // namespace nmeascene
