// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>

#include "epoch.hpp"

namespace nmeascene::summary {

struct ColumnStats {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  std::size_t count = 0;
};

// Per-site statistics in the layout of a static-test results table. Every
// column is computed over the epochs with measurements only; epochs
// without measurements are counted separately.
struct SiteSummary {
  ColumnStats cn0_mean;
  ColumnStats cn0_sum;
  ColumnStats pdop;
  ColumnStats hdop;
  ColumnStats satellites;
  std::size_t epochs_with_measurements = 0;
  std::size_t epochs_without_measurements = 0;
};

SiteSummary summarize(std::span<const epoch::EpochMetrics> metrics);

/// Aligned text table; the epochs row reads "with (without)".
std::string summary_text(const SiteSummary& s);
std::string summary_json(const SiteSummary& s);

}  // namespace nmeascene::summary
