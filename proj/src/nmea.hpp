// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"

namespace nmeascene::nmea {

// Receivers report PDOP/HDOP/VDOP = 99.99 when they have no usable fix.
inline constexpr double kNoFixDop = 99.99;

enum class Constellation { Gps, Glonass, Galileo, Beidou, Multi, Other };

std::string_view constellation_name(Constellation c) noexcept;

struct ParsePolicy {
  // Strict: a checksum is required and must verify. Lenient: a missing
  // checksum is accepted; a wrong one is still rejected.
  bool strict_checksum = true;
  // GP talkers are always accepted. GN/GL/GA/GB/BD/GQ only with this flag.
  bool accept_multi_constellation = false;
};

struct RawSentence {
  std::string talker;    // "GP", "GN", ... or "P" for proprietary
  std::string type_tag;  // "GGA", "GSA", "GSV", ...
  std::vector<std::string> fields;  // everything after the address field
  std::optional<std::string> checksum;
  std::size_t line_number = 0;
  std::string text;  // the sentence without its line terminator
  Constellation constellation = Constellation::Other;
};

struct SatelliteObservation {
  int prn = 0;
  std::optional<double> elevation_deg;
  std::optional<double> azimuth_deg;
  // Absent when the receiver lists the satellite without a signal reading.
  std::optional<double> cn0_dbhz;
  Constellation constellation = Constellation::Gps;

  friend bool operator==(const SatelliteObservation&,
                         const SatelliteObservation&) = default;
};

struct DopValues {
  double pdop = kNoFixDop;
  double hdop = kNoFixDop;
  std::optional<double> vdop;

  friend bool operator==(const DopValues&, const DopValues&) = default;
};

struct TimeOfDay {
  int hour = 0;
  int minute = 0;
  double second = 0.0;

  friend bool operator==(const TimeOfDay&, const TimeOfDay&) = default;
};

struct FixData {
  std::optional<TimeOfDay> utc_time;
  int fix_quality = 0;
  int satellites_used = 0;
  std::optional<double> latitude_deg;
  std::optional<double> longitude_deg;
  std::optional<double> altitude_m;
  std::optional<double> hdop;

  friend bool operator==(const FixData&, const FixData&) = default;
};

struct GgaRecord {
  FixData fix;
};

struct GsaRecord {
  char selection_mode = 'A';
  int fix_type = 1;  // 1 no fix, 2 2-D, 3 3-D
  std::vector<int> prns;
  std::optional<DopValues> dop;  // absent when PDOP or HDOP is empty
};

struct GsvRecord {
  int total_messages = 0;
  int message_number = 0;
  int satellites_in_view = 0;
  std::vector<SatelliteObservation> satellites;
};

struct Unhandled {};

using SentenceBody = std::variant<Unhandled, GgaRecord, GsaRecord, GsvRecord>;

struct Sentence {
  RawSentence raw;
  SentenceBody body;
  std::vector<Diagnostic> diagnostics;

  bool is_unhandled() const { return std::holds_alternative<Unhandled>(body); }
};

struct ParseError {
  ErrorCode code = ErrorCode::MalformedFrame;
  std::string message;
  std::size_t line_number = 0;
};

using ParseResult = std::variant<Sentence, ParseError>;

/// XOR fold of the payload bytes (the characters strictly between '$' and
/// '*').
std::uint8_t checksum_byte(std::string_view payload) noexcept;

/// Two uppercase hex digits of checksum_byte(payload).
std::string compute_checksum(std::string_view payload);

/// "$" + payload + "*" + checksum, no line terminator.
std::string frame_sentence(std::string_view payload);

/// Parses one sentence. Trailing CR/LF is ignored. Range violations in
/// individual fields become absent values with a FieldRange diagnostic;
/// only framing and checksum failures produce a ParseError.
ParseResult parse_sentence(std::string_view line, const ParsePolicy& policy,
                           std::size_t line_number = 0);

struct GsvAssembly {
  std::vector<SatelliteObservation> satellites;
  std::vector<Diagnostic> diagnostics;
};

/// Concatenates the satellites of one multi-part GSV group in sentence
/// order. Gaps, duplicates and disagreeing totals are reported as
/// diagnostics; whatever was received is still returned.
GsvAssembly assemble_gsv(std::span<const GsvRecord> group);

/// One-line human-readable rendering of a parsed sentence, used by the
/// `parse` subcommand.
std::string describe(const Sentence& s);

}  // namespace nmeascene::nmea
