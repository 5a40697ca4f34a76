// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "classifier.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "error.hpp"
#include "kv_config.hpp"

namespace nmeascene::classify {

namespace {

constexpr std::array<std::string_view, kScenarioCount> kNames{
    "open_outdoor", "obstructed_outdoor", "indoor_near_opening", "indoor",
    "indeterminate"};

bool in_band(double v, double lo, double hi) { return v >= lo && v < hi; }

}  // namespace

std::string_view scenario_name(Scenario s) noexcept {
  return kNames[static_cast<std::size_t>(s)];
}

std::optional<Scenario> scenario_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Scenario>(i);
  }
  return std::nullopt;
}

std::string_view mode_name(Mode m) noexcept {
  return m == Mode::SumOnly ? "sum" : "combined";
}

std::optional<Mode> mode_from_name(std::string_view name) noexcept {
  if (name == "sum") return Mode::SumOnly;
  if (name == "combined") return Mode::Combined;
  return std::nullopt;
}

void RuleSet::validate() const {
  const auto& t = thresholds;
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::ConfigError, what);
  };
  require(t.sum_near_opening >= 0.0, "sum_near_opening must be >= 0");
  require(t.sum_near_opening < t.sum_obstructed,
          "sum_near_opening must be below sum_obstructed");
  require(t.sum_obstructed < t.sum_open, "sum_obstructed must be below sum_open");
  require(t.mean_obstructed_min >= 0.0, "mean_obstructed_min must be >= 0");
  require(t.mean_obstructed_min < t.mean_obstructed_max,
          "mean_obstructed_min must be below mean_obstructed_max");
  require(t.mean_open >= 0.0, "mean_open must be >= 0");
  require(t.mean_indoor >= 0.0, "mean_indoor must be >= 0");
  require(t.dop_max > 0.0, "dop_max must be positive");
  require(t.min_sats >= 0, "min_sats must be >= 0");
}

void RuleSet::set(std::string_view key, std::string_view value) {
  auto& t = thresholds;
  if (key == "mode") {
    auto m = mode_from_name(value);
    if (!m) throw Error(ErrorCode::ConfigError, "mode must be sum or combined");
    mode = *m;
    return;
  }
  const double v = config_number(key, value);
  if (key == "sum_open") t.sum_open = v;
  else if (key == "sum_obstructed") t.sum_obstructed = v;
  else if (key == "sum_near_opening") t.sum_near_opening = v;
  else if (key == "mean_open") t.mean_open = v;
  else if (key == "mean_obstructed_min") t.mean_obstructed_min = v;
  else if (key == "mean_obstructed_max") t.mean_obstructed_max = v;
  else if (key == "mean_indoor") t.mean_indoor = v;
  else if (key == "dop_max") t.dop_max = v;
  else if (key == "min_sats") {
    if (v != std::floor(v)) {
      throw Error(ErrorCode::ConfigError, "min_sats must be an integer");
    }
    t.min_sats = static_cast<int>(v);
  } else if (key == "sat_override_any_sum") {
    t.sat_override_any_sum = v != 0.0;
  } else {
    throw Error(ErrorCode::ConfigError, "unknown rule key: " + std::string(key));
  }
}

void RuleSet::load(std::string_view config_text) {
  for (const auto& [k, v] : parse_key_values(config_text)) set(k, v);
  validate();
}

std::string RuleSet::to_config() const {
  const auto& t = thresholds;
  std::ostringstream os;
  os << "mode=" << mode_name(mode) << '\n'
     << "sum_open=" << t.sum_open << '\n'
     << "sum_obstructed=" << t.sum_obstructed << '\n'
     << "sum_near_opening=" << t.sum_near_opening << '\n'
     << "mean_open=" << t.mean_open << '\n'
     << "mean_obstructed_min=" << t.mean_obstructed_min << '\n'
     << "mean_obstructed_max=" << t.mean_obstructed_max << '\n'
     << "mean_indoor=" << t.mean_indoor << '\n'
     << "dop_max=" << t.dop_max << '\n'
     << "min_sats=" << t.min_sats << '\n'
     << "sat_override_any_sum=" << (t.sat_override_any_sum ? 1 : 0) << '\n';
  return os.str();
}

int round_half_up_count(double count) noexcept {
  return static_cast<int>(std::floor(count + 0.5));
}

Scenario classify_sum_only(const epoch::EpochMetrics& m, const RuleSet& rules) {
  const auto& t = rules.thresholds;
  if (m.cn0_sum >= t.sum_open) return Scenario::OpenOutdoor;
  if (m.cn0_sum >= t.sum_obstructed) return Scenario::ObstructedOutdoor;
  if (m.cn0_sum >= t.sum_near_opening) return Scenario::IndoorNearOpening;
  return Scenario::Indoor;
}

Scenario classify_combined(const epoch::EpochMetrics& m, const RuleSet& rules) {
  const auto& t = rules.thresholds;
  const double sum = m.cn0_sum;
  const bool few_sats = m.satellite_count < t.min_sats;
  const bool weak_mean = m.cn0_mean && *m.cn0_mean < t.mean_indoor;

  // Fixed precedence: indoor, open, obstructed, near opening.
  const bool indoor_band = sum < t.sum_near_opening;
  if (t.sat_override_any_sum ? ((indoor_band && weak_mean) || few_sats)
                             : (indoor_band && (weak_mean || few_sats))) {
    return Scenario::Indoor;
  }
  if (!m.cn0_mean) return Scenario::Indeterminate;
  const double mean = *m.cn0_mean;
  if (sum >= t.sum_open && mean >= t.mean_open && m.pdop <= t.dop_max &&
      m.hdop <= t.dop_max) {
    return Scenario::OpenOutdoor;
  }
  if (in_band(sum, t.sum_obstructed, t.sum_open) &&
      in_band(mean, t.mean_obstructed_min, t.mean_obstructed_max)) {
    return Scenario::ObstructedOutdoor;
  }
  if (in_band(sum, t.sum_near_opening, t.sum_obstructed) && m.pdop > t.dop_max &&
      m.hdop > t.dop_max) {
    return Scenario::IndoorNearOpening;
  }
  return Scenario::Indeterminate;
}

Scenario classify(const epoch::EpochMetrics& m, const RuleSet& rules) {
  return rules.mode == Mode::SumOnly ? classify_sum_only(m, rules)
                                     : classify_combined(m, rules);
}

std::vector<Scenario> smooth_labels(std::span<const Scenario> labels, int window) {
  if (window < 1 || window % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, "smoothing window must be odd and >= 1");
  }
  std::vector<Scenario> out(labels.begin(), labels.end());
  if (window == 1) return out;

  const std::ptrdiff_t half = window / 2;
  const auto n = static_cast<std::ptrdiff_t>(labels.size());
  std::array<int, kScenarioCount> counts{};
  // Sliding counts over [i - half, i + half] clipped to the stream.
  for (std::ptrdiff_t j = 0; j < std::min(half, n); ++j) {
    ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(j)])];
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (i + half < n) ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i + half)])];
    if (i - half - 1 >= 0) --counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i - half - 1)])];

    const Scenario own = labels[static_cast<std::size_t>(i)];
    int best = counts[static_cast<std::size_t>(own)];
    Scenario pick = own;
    for (int s = 0; s < kScenarioCount; ++s) {
      if (counts[static_cast<std::size_t>(s)] > best) {
        best = counts[static_cast<std::size_t>(s)];
        pick = static_cast<Scenario>(s);
      }
    }
    out[static_cast<std::size_t>(i)] = pick;
  }
  return out;
}

std::vector<EpochLabel> classify_stream(std::span<const epoch::EpochMetrics> metrics,
                                        const RuleSet& rules, int window) {
  std::vector<Scenario> raw;
  raw.reserve(metrics.size());
  for (const auto& m : metrics) raw.push_back(classify(m, rules));
  auto smoothed = smooth_labels(raw, window);
  std::vector<EpochLabel> out;
  out.reserve(metrics.size());
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    out.push_back({metrics[i].epoch_index, smoothed[i]});
  }
  return out;
}

}  // namespace nmeascene::classify
