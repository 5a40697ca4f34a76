// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "validation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace nmeascene::validation {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::size_t parse_epoch(std::string_view s, std::size_t line_no) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::FormatError,
                "line " + std::to_string(line_no) + ": bad epoch '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<LabelInterval> normalize_labels(std::vector<LabelInterval> intervals) {
  if (intervals.empty()) throw Error(ErrorCode::EmptyFile, "no label intervals");
  for (const auto& iv : intervals) {
    if (iv.truth == Scenario::Indeterminate) {
      throw Error(ErrorCode::UnknownLabel, "indeterminate is not a ground-truth label");
    }
    if (iv.end_epoch <= iv.start_epoch) {
      throw Error(ErrorCode::FormatError,
                  "interval " + std::to_string(iv.start_epoch) + "," +
                      std::to_string(iv.end_epoch) + " is empty");
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const auto& a, const auto& b) { return a.start_epoch < b.start_epoch; });
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].start_epoch < intervals[i - 1].end_epoch) {
      throw Error(ErrorCode::OverlapError,
                  "intervals starting at " + std::to_string(intervals[i - 1].start_epoch) +
                      " and " + std::to_string(intervals[i].start_epoch) + " overlap");
    }
  }
  return intervals;
}

std::vector<LabelInterval> load_labels(std::string_view csv_text) {
  std::vector<LabelInterval> out;
  std::size_t line_no = 0;
  while (!csv_text.empty()) {
    ++line_no;
    auto nl = csv_text.find('\n');
    std::string_view line = trim(csv_text.substr(0, nl));
    csv_text = nl == std::string_view::npos ? std::string_view() : csv_text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("start_epoch", 0) == 0) continue;

    std::string_view cols[3];
    for (int c = 0; c < 3; ++c) {
      auto comma = line.find(',');
      if ((comma == std::string_view::npos) != (c == 2)) {
        throw Error(ErrorCode::FormatError,
                    "line " + std::to_string(line_no) + ": expected 3 columns");
      }
      cols[c] = trim(line.substr(0, comma));
      if (comma != std::string_view::npos) line.remove_prefix(comma + 1);
    }
    auto truth = classify::scenario_from_name(cols[2]);
    if (!truth || *truth == Scenario::Indeterminate) {
      throw Error(ErrorCode::UnknownLabel, "line " + std::to_string(line_no) +
                                               ": unknown label '" +
                                               std::string(cols[2]) + "'");
    }
    out.push_back({parse_epoch(cols[0], line_no), parse_epoch(cols[1], line_no), *truth});
  }
  return normalize_labels(std::move(out));
}

double ValidationReport::error_pct() const {
  return total_epochs == 0 ? 0.0 : 100.0 * static_cast<double>(mismatches) /
                                       static_cast<double>(total_epochs);
}

double ValidationReport::accuracy_from_confusion() const {
  std::uint64_t diag = 0;
  for (int t = 0; t < kTruthClasses; ++t) diag += confusion[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
  return total_epochs == 0 ? 0.0 : 100.0 * static_cast<double>(diag) /
                                       static_cast<double>(total_epochs);
}

ValidationReport evaluate(std::span<const classify::EpochLabel> predicted,
                          std::span<const LabelInterval> truth) {
  std::vector<LabelInterval> sorted(truth.begin(), truth.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.start_epoch < b.start_epoch; });

  ValidationReport r;
  for (const auto& p : predicted) {
    auto it = std::upper_bound(
        sorted.begin(), sorted.end(), p.epoch_index,
        [](std::size_t e, const LabelInterval& iv) { return e < iv.start_epoch; });
    if (it == sorted.begin() || p.epoch_index >= std::prev(it)->end_epoch) {
      throw Error(ErrorCode::UncoveredEpoch,
                  "epoch " + std::to_string(p.epoch_index) + " is outside every label interval");
    }
    const Scenario t = std::prev(it)->truth;
    ++r.total_epochs;
    ++r.confusion[static_cast<std::size_t>(p.scenario)][static_cast<std::size_t>(t)];
    if (p.scenario == t) {
      ++r.matches;
    } else {
      ++r.mismatches;
      if (p.scenario == Scenario::Indeterminate) ++r.indeterminate;
    }
  }
  r.accuracy_pct = r.total_epochs == 0 ? 0.0
                                       : 100.0 * static_cast<double>(r.matches) /
                                             static_cast<double>(r.total_epochs);
  return r;
}

ValidationReport report_from_counts(std::uint64_t total, std::uint64_t matches) {
  if (matches > total) throw Error(ErrorCode::InvalidArgument, "matches exceed total");
  ValidationReport r;
  r.total_epochs = total;
  r.matches = matches;
  r.mismatches = total - matches;
  r.accuracy_pct = total == 0 ? 0.0 : 100.0 * static_cast<double>(matches) /
                                          static_cast<double>(total);
  return r;
}

std::string percent_2dp(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) return "0.00";
  // Hundredths of a percent, rounded half-up. Exact for part < 1.8e15.
  const std::uint64_t scaled = part * 10000u;
  std::uint64_t hundredths = scaled / whole;
  if (2 * (scaled % whole) >= whole) ++hundredths;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%llu.%02llu",
                static_cast<unsigned long long>(hundredths / 100),
                static_cast<unsigned long long>(hundredths % 100));
  return buf;
}

std::string report_text(const ValidationReport& r) {
  std::ostringstream os;
  os << "epochs         " << r.total_epochs << '\n'
     << "matches        " << r.matches << " (" << percent_2dp(r.matches, r.total_epochs) << "%)\n"
     << "mismatches     " << r.mismatches << " (" << percent_2dp(r.mismatches, r.total_epochs)
     << "%)\n"
     << "indeterminate  " << r.indeterminate << '\n'
     << "accuracy       " << percent_2dp(r.matches, r.total_epochs) << "%\n\n"
     << "confusion (rows predicted, columns truth)\n";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-20s", "");
  os << buf;
  for (int t = 0; t < kTruthClasses; ++t) {
    std::snprintf(buf, sizeof buf, "%20s",
                  std::string(classify::scenario_name(static_cast<Scenario>(t))).c_str());
    os << buf;
  }
  os << '\n';
  for (int p = 0; p < classify::kScenarioCount; ++p) {
    std::snprintf(buf, sizeof buf, "%-20s",
                  std::string(classify::scenario_name(static_cast<Scenario>(p))).c_str());
    os << buf;
    for (int t = 0; t < kTruthClasses; ++t) {
      std::snprintf(buf, sizeof buf, "%20llu",
                    static_cast<unsigned long long>(r.confusion[static_cast<std::size_t>(p)][static_cast<std::size_t>(t)]));
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

std::string report_json(const ValidationReport& r) {
  nlohmann::ordered_json j;
  j["total_epochs"] = r.total_epochs;
  j["matches"] = r.matches;
  j["mismatches"] = r.mismatches;
  j["indeterminate"] = r.indeterminate;
  j["accuracy_pct"] = std::stod(percent_2dp(r.matches, r.total_epochs));
  j["error_pct"] = std::stod(percent_2dp(r.mismatches, r.total_epochs));
  nlohmann::ordered_json confusion = nlohmann::ordered_json::object();
  for (int p = 0; p < classify::kScenarioCount; ++p) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (int t = 0; t < kTruthClasses; ++t) {
      row[std::string(classify::scenario_name(static_cast<Scenario>(t)))] =
          r.confusion[static_cast<std::size_t>(p)][static_cast<std::size_t>(t)];
    }
    confusion[std::string(classify::scenario_name(static_cast<Scenario>(p)))] = row;
  }
  j["confusion"] = confusion;
  return j.dump(2);
}

}  // namespace nmeascene::validation
