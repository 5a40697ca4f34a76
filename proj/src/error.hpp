// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nmeascene {

// Error kinds shared by every module. Values are stable: the C API mirrors
// them one-to-one in nsc_status.
enum class ErrorCode : int {
  Ok = 0,
  InvalidArgument = 1,
  ChecksumMismatch = 2,
  MalformedFrame = 3,
  FieldRange = 4,
  IncompleteGroup = 5,
  InconsistentTotals = 6,
  DomainError = 7,
  RangeError = 8,
  OverlapError = 9,
  UnknownLabel = 10,
  EmptyFile = 11,
  UncoveredEpoch = 12,
  ConfigError = 13,
  IoError = 14,
  FormatError = 15,
  Internal = 16,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Non-fatal anomaly attached to a parsed sentence or an epoch.
struct Diagnostic {
  ErrorCode code = ErrorCode::Ok;
  std::string message;
  std::size_t line_number = 0;  // 0 when not tied to an input line
};

std::string format_diagnostic(const Diagnostic& d);

}  // namespace nmeascene
