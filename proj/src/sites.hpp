// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "classifier.hpp"
#include "epoch.hpp"

namespace nmeascene::sites {

struct Stat {
  double mean;
  double sd;
};

// One static test site: hourly statistics of a GPS-only L1 receiver at 1 Hz.
// Sites A-* are open outdoor, B-* outdoor with relevant obstructions, C-*
// indoor near openings and D-* deep indoor.
struct SiteStatistics {
  std::string_view name;   // "local_a1"
  std::string_view label;  // "A-1"
  classify::Scenario scenario;
  Stat cn0_mean;
  Stat cn0_sum;
  Stat pdop;
  Stat hdop;
  Stat satellites;
  int epochs_with;     // epochs with at least one satellite above 0 dB-Hz
  int epochs_without;
};

inline constexpr std::size_t kSiteCount = 40;

const std::array<SiteStatistics, kSiteCount>& site_table() noexcept;
std::optional<SiteStatistics> find_site(std::string_view name) noexcept;

/// The site's row means as a single metrics vector. The fractional
/// satellite mean is rounded half-up.
epoch::EpochMetrics site_mean_metrics(const SiteStatistics& s);

}  // namespace nmeascene::sites
