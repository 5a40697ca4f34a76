// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "kv_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace nmeascene {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

KeyValues parse_key_values(std::string_view text) {
  KeyValues out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError,
                  "line " + std::to_string(line_no) + ": expected key=value");
    }
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw Error(ErrorCode::ConfigError,
                  "line " + std::to_string(line_no) + ": empty key");
    }
    out.emplace_back(std::string(key), std::string(value));
  }
  return out;
}

double config_number(std::string_view key, std::string_view value) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size() ||
      !std::isfinite(v)) {
    throw Error(ErrorCode::ConfigError, std::string(key) + ": '" +
                                            std::string(value) +
                                            "' is not a number");
  }
  return v;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path);
  return ss.str();
}

}  // namespace nmeascene
