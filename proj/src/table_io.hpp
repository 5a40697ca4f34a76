// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "classifier.hpp"
#include "epoch.hpp"

namespace nmeascene::table_io {

enum class Format { Csv, JsonLines };

inline constexpr std::string_view kMetricsHeader =
    "epoch,cn0_sum,cn0_mean,pdop,hdop,sat_count,has_measurement";
inline constexpr std::string_view kLabelsHeader = "epoch,scenario";

// dB-Hz and DOP values are written with exactly two decimals; an absent
// mean is an empty CSV field or JSON null.
std::string format_metrics(const epoch::EpochMetrics& m, Format f);
std::string format_label(const classify::EpochLabel& l, Format f);

/// Reads a metrics table written by format_metrics. CSV (header optional)
/// or JSON lines are detected from the first non-blank character. Throws
/// Error(FormatError) naming the offending line.
std::vector<epoch::EpochMetrics> parse_metrics(std::string_view text);

/// Reads `epoch,scenario` rows (CSV or JSON lines).
std::vector<classify::EpochLabel> parse_labels(std::string_view text);

}  // namespace nmeascene::table_io
