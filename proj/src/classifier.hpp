// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epoch.hpp"

namespace nmeascene::classify {

enum class Scenario {
  OpenOutdoor = 0,
  ObstructedOutdoor = 1,
  IndoorNearOpening = 2,
  Indoor = 3,
  Indeterminate = 4,  // combined rule set only
};

inline constexpr int kScenarioCount = 5;

std::string_view scenario_name(Scenario s) noexcept;
std::optional<Scenario> scenario_from_name(std::string_view name) noexcept;

enum class Mode { SumOnly, Combined };

std::string_view mode_name(Mode m) noexcept;
std::optional<Mode> mode_from_name(std::string_view name) noexcept;

// Boundaries are lower-inclusive, upper-exclusive on sums and means.
struct Thresholds {
  double sum_open = 350.0;
  double sum_obstructed = 200.0;
  double sum_near_opening = 100.0;
  double mean_open = 30.0;
  double mean_obstructed_min = 20.0;
  double mean_obstructed_max = 30.0;
  double mean_indoor = 25.0;
  double dop_max = 7.0;
  int min_sats = 4;
  // false: "fewer than min_sats satellites" marks an epoch indoor only
  // inside the indoor sum band, so every combined label agrees with the
  // sum-only label. true: the satellite clause overrides any sum.
  bool sat_override_any_sum = false;
};

struct RuleSet {
  Mode mode = Mode::SumOnly;
  Thresholds thresholds;

  static RuleSet defaults(Mode mode) { return RuleSet{mode, {}}; }

  /// Throws Error(ConfigError) when the threshold ordering is broken.
  void validate() const;

  /// Applies one `key=value` override (keys match Thresholds members, plus
  /// `mode`). Does not validate.
  void set(std::string_view key, std::string_view value);

  /// Applies a whole flat config file and validates the result.
  void load(std::string_view config_text);

  std::string to_config() const;
};

/// Satellite counts averaged over many epochs are fractional; they are
/// rounded half-up before the minimum-satellite comparison.
int round_half_up_count(double count) noexcept;

Scenario classify_sum_only(const epoch::EpochMetrics& m, const RuleSet& rules);
Scenario classify_combined(const epoch::EpochMetrics& m, const RuleSet& rules);
Scenario classify(const epoch::EpochMetrics& m, const RuleSet& rules);

struct EpochLabel {
  std::size_t epoch_index = 0;
  Scenario scenario = Scenario::Indeterminate;

  friend bool operator==(const EpochLabel&, const EpochLabel&) = default;
};

/// Majority vote over labels in a centred window (truncated at the stream
/// ends). Ties keep the unsmoothed label when it is among the maxima,
/// otherwise the lowest Scenario value among the tied labels wins.
/// Throws Error(InvalidArgument) unless window is odd and >= 1.
std::vector<Scenario> smooth_labels(std::span<const Scenario> labels,
                                    int window);

std::vector<EpochLabel> classify_stream(std::span<const epoch::EpochMetrics> metrics,
                                        const RuleSet& rules, int window = 1);

}  // namespace nmeascene::classify
