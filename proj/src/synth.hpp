// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "classifier.hpp"
#include "sites.hpp"

namespace nmeascene::synth {

struct ScenarioProfile {
  std::string name;
  std::optional<classify::Scenario> scenario;  // ground truth, if known
  double cn0_mean_mu = 0.0;
  double cn0_mean_sigma = 0.0;
  double sat_count_mu = 0.0;
  double sat_count_sigma = 0.0;
  double pdop_mu = 0.0;
  double pdop_sigma = 0.0;
  double hdop_mu = 0.0;
  double hdop_sigma = 0.0;
  double missing_epoch_rate = 0.0;

  /// Throws Error(ConfigError) on negative sigmas, a negative satellite
  /// mean or a missing rate outside [0, 1].
  void validate() const;

  /// Flat key=value form; keys are the member names.
  std::string to_config() const;
  static ScenarioProfile from_config(std::string_view text);

  static ScenarioProfile from_site(const sites::SiteStatistics& site);
};

/// Built-in profiles are named local_a1 ... local_d10.
std::optional<ScenarioProfile> builtin_profile(std::string_view name);

/// A builtin name, or else a path to a profile file.
ScenarioProfile resolve_profile(const std::string& name_or_path);

struct GeneratorConfig {
  ScenarioProfile profile;
  std::size_t epochs = 3600;
  std::uint64_t seed = 0;
  std::vector<int> prn_pool = default_prn_pool();

  static std::vector<int> default_prn_pool();
  void validate() const;
};

inline constexpr double kMaxCn0 = 60.0;
inline constexpr double kMinDop = 0.5;
inline constexpr int kSatellitesPerGsv = 4;

/// Sentences (framed, checksummed, no line terminator) for one epoch.
/// Depends only on (config, epoch_index); the draw order is:
///   0      missing-epoch uniform (missing: GGA without fix, nothing else)
///   1-2    satellite count N, Gaussian, rounded half-up, clamped to the pool
///   3-6    PDOP then HDOP, Gaussians clamped to [0.5, 99.99], swapped so
///          HDOP <= PDOP
///   next N PRN picks (partial Fisher-Yates over the pool)
///   next 2N per-satellite C/N0, Gaussians clamped to [0, 60]
/// Epochs with N < 4 report the 99.99 DOP sentinel and no fix.
std::vector<std::string> generate_epoch(const GeneratorConfig& config,
                                        std::size_t epoch_index);

/// All epochs in index order, CRLF-terminated.
std::string generate_log(const GeneratorConfig& config);

}  // namespace nmeascene::synth
