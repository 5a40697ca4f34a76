// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "table_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "error.hpp"

namespace nmeascene::table_io {

namespace {

using json = nlohmann::ordered_json;

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// JSON numbers carry the same two-decimal value as the CSV text.
double round2(double v) { return std::stod(fixed2(v)); }

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto p = line.find(sep);
    out.push_back(line.substr(0, p));
    if (p == std::string_view::npos) break;
    line.remove_prefix(p + 1);
  }
  return out;
}

[[noreturn]] void bad(std::size_t line_no, const std::string& why) {
  throw Error(ErrorCode::FormatError, "line " + std::to_string(line_no) + ": " + why);
}

double parse_double(std::string_view s, std::size_t line_no, const char* name) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    bad(line_no, std::string(name) + " is not a number");
  }
  return v;
}

long long parse_int(std::string_view s, std::size_t line_no, const char* name) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0) {
    bad(line_no, std::string(name) + " is not a non-negative integer");
  }
  return v;
}

bool parse_bool(std::string_view s, std::size_t line_no) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  bad(line_no, "has_measurement must be true/false");
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) fn(line, line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

epoch::EpochMetrics metrics_from_json(const json& j, std::size_t line_no) {
  try {
    epoch::EpochMetrics m;
    m.epoch_index = j.at("epoch").get<std::size_t>();
    m.cn0_sum = j.at("cn0_sum").get<double>();
    if (!j.at("cn0_mean").is_null()) m.cn0_mean = j.at("cn0_mean").get<double>();
    m.pdop = j.at("pdop").get<double>();
    m.hdop = j.at("hdop").get<double>();
    m.satellite_count = j.at("sat_count").get<int>();
    m.has_measurement = j.at("has_measurement").get<bool>();
    return m;
  } catch (const json::exception& e) {
    bad(line_no, e.what());
  }
}

}  // namespace

std::string format_metrics(const epoch::EpochMetrics& m, Format f) {
  if (f == Format::JsonLines) {
    json j;
    j["epoch"] = m.epoch_index;
    j["cn0_sum"] = round2(m.cn0_sum);
    j["cn0_mean"] = m.cn0_mean ? json(round2(*m.cn0_mean)) : json(nullptr);
    j["pdop"] = round2(m.pdop);
    j["hdop"] = round2(m.hdop);
    j["sat_count"] = m.satellite_count;
    j["has_measurement"] = m.has_measurement;
    return j.dump();
  }
  std::string out = std::to_string(m.epoch_index);
  out += ',' + fixed2(m.cn0_sum);
  out += ',';
  if (m.cn0_mean) out += fixed2(*m.cn0_mean);
  out += ',' + fixed2(m.pdop);
  out += ',' + fixed2(m.hdop);
  out += ',' + std::to_string(m.satellite_count);
  out += m.has_measurement ? ",true" : ",false";
  return out;
}

std::string format_label(const classify::EpochLabel& l, Format f) {
  if (f == Format::JsonLines) {
    json j;
    j["epoch"] = l.epoch_index;
    j["scenario"] = std::string(classify::scenario_name(l.scenario));
    return j.dump();
  }
  return std::to_string(l.epoch_index) + ',' +
         std::string(classify::scenario_name(l.scenario));
}

std::vector<epoch::EpochMetrics> parse_metrics(std::string_view text) {
  std::vector<epoch::EpochMetrics> out;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (line.front() == '{') {
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded()) bad(line_no, "invalid JSON");
      out.push_back(metrics_from_json(j, line_no));
      return;
    }
    if (line == kMetricsHeader) return;
    auto f = split(line, ',');
    if (f.size() != 7) bad(line_no, "expected 7 columns");
    epoch::EpochMetrics m;
    m.epoch_index = static_cast<std::size_t>(parse_int(f[0], line_no, "epoch"));
    m.cn0_sum = parse_double(f[1], line_no, "cn0_sum");
    if (!f[2].empty()) m.cn0_mean = parse_double(f[2], line_no, "cn0_mean");
    m.pdop = parse_double(f[3], line_no, "pdop");
    m.hdop = parse_double(f[4], line_no, "hdop");
    m.satellite_count = static_cast<int>(parse_int(f[5], line_no, "sat_count"));
    m.has_measurement = parse_bool(f[6], line_no);
    out.push_back(m);
  });
  return out;
}

std::vector<classify::EpochLabel> parse_labels(std::string_view text) {
  std::vector<classify::EpochLabel> out;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    std::size_t epoch = 0;
    std::string name;
    if (line.front() == '{') {
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded()) bad(line_no, "invalid JSON");
      try {
        epoch = j.at("epoch").get<std::size_t>();
        name = j.at("scenario").get<std::string>();
      } catch (const json::exception& e) {
        bad(line_no, e.what());
      }
    } else {
      if (line == kLabelsHeader) return;
      auto f = split(line, ',');
      if (f.size() != 2) bad(line_no, "expected 2 columns");
      epoch = static_cast<std::size_t>(parse_int(f[0], line_no, "epoch"));
      name = std::string(f[1]);
    }
    auto s = classify::scenario_from_name(name);
    if (!s) {
      throw Error(ErrorCode::UnknownLabel,
                  "line " + std::to_string(line_no) + ": unknown scenario '" + name + "'");
    }
    out.push_back({epoch, *s});
  });
  return out;
}

}  // namespace nmeascene::table_io
