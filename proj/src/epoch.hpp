// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nmea.hpp"

namespace nmeascene::epoch {

struct EpochRecord {
  std::size_t epoch_index = 0;
  std::optional<nmea::FixData> fix;
  std::optional<nmea::DopValues> dop;
  std::vector<nmea::SatelliteObservation> satellites;
  std::vector<Diagnostic> diagnostics;
  std::size_t duplicate_sentences = 0;
};

// Per-epoch feature vector consumed by the classifier.
//
// has_measurement <=> satellite_count >= 1 <=> cn0_mean present, where
// satellite_count counts satellites with a present C/N0 strictly above 0.
struct EpochMetrics {
  std::size_t epoch_index = 0;
  double cn0_sum = 0.0;
  std::optional<double> cn0_mean;
  double pdop = nmea::kNoFixDop;
  double hdop = nmea::kNoFixDop;
  int satellite_count = 0;
  bool has_measurement = false;

  friend bool operator==(const EpochMetrics&, const EpochMetrics&) = default;
};

/// Folds the sentences of one epoch. Duplicate GGA/GSA: last one wins.
/// GSV parts are grouped per talker; a part numbered 1 opens a new group
/// and a repeated group replaces the earlier one.
EpochRecord fold_epoch(std::span<const nmea::Sentence> sentences,
                       std::size_t epoch_index = 0);

EpochMetrics compute_metrics(const EpochRecord& record);

// Single-consumer stateful folder. A GGA sentence opens a new epoch; every
// GSA/GSV until the next GGA belongs to it. Bad lines never abort the
// stream: they are reported through take_diagnostics().
class EpochStream {
 public:
  explicit EpochStream(nmea::ParsePolicy policy = {},
                       std::size_t first_epoch_index = 0);

  void push_line(std::string_view line);
  void push(nmea::Sentence sentence);
  // Closes the epoch in progress, if any.
  void finish();

  bool ready() const { return !done_.empty(); }
  std::optional<EpochRecord> next_record();
  std::optional<EpochMetrics> next();

  std::vector<Diagnostic> take_diagnostics();
  std::size_t lines_seen() const { return line_number_; }

 private:
  void close_epoch();

  nmea::ParsePolicy policy_;
  std::size_t next_index_;
  std::size_t line_number_ = 0;
  bool open_ = false;
  std::vector<nmea::Sentence> pending_;
  std::deque<EpochRecord> done_;
  std::vector<Diagnostic> diagnostics_;
};

/// Batch convenience over EpochStream: splits text into lines and returns
/// one EpochMetrics per GGA-delimited epoch.
std::vector<EpochMetrics> stream_epochs(std::string_view text,
                                        const nmea::ParsePolicy& policy = {},
                                        std::vector<Diagnostic>* diagnostics = nullptr);

}  // namespace nmeascene::epoch
