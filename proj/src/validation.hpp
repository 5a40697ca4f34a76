// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "classifier.hpp"

namespace nmeascene::validation {

using classify::Scenario;

// Ground truth for epochs [start_epoch, end_epoch).
struct LabelInterval {
  std::size_t start_epoch = 0;
  std::size_t end_epoch = 0;
  Scenario truth = Scenario::OpenOutdoor;  // never Indeterminate

  friend bool operator==(const LabelInterval&, const LabelInterval&) = default;
};

/// Sorts by start and checks the invariants. Throws OverlapError,
/// UnknownLabel (Indeterminate truth), FormatError (empty interval) or
/// EmptyFile (no intervals).
std::vector<LabelInterval> normalize_labels(std::vector<LabelInterval> intervals);

/// Parses `start_epoch,end_epoch,label` CSV (header row optional) and
/// normalizes it.
std::vector<LabelInterval> load_labels(std::string_view csv_text);

inline constexpr int kTruthClasses = 4;

struct ValidationReport {
  std::uint64_t total_epochs = 0;
  std::uint64_t matches = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t indeterminate = 0;  // also counted in mismatches
  double accuracy_pct = 0.0;
  // confusion[predicted][truth]; the Indeterminate row is last.
  std::array<std::array<std::uint64_t, kTruthClasses>, classify::kScenarioCount>
      confusion{};

  double error_pct() const;
  double accuracy_from_confusion() const;
};

/// Per-epoch comparison. Throws Error(UncoveredEpoch) when a predicted
/// epoch lies outside every interval.
ValidationReport evaluate(std::span<const classify::EpochLabel> predicted,
                          std::span<const LabelInterval> truth);

/// Builds a report from bare counts (all errors treated as plain
/// mismatches), for checking published accuracy figures.
ValidationReport report_from_counts(std::uint64_t total, std::uint64_t matches);

/// 100 * part / whole rounded half-up to two decimals, e.g. "98.11".
/// Exact integer arithmetic; "0.00" when whole is 0.
std::string percent_2dp(std::uint64_t part, std::uint64_t whole);

std::string report_text(const ValidationReport& r);
std::string report_json(const ValidationReport& r);

}  // namespace nmeascene::validation
