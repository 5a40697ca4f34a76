// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "error.hpp"

namespace nmeascene {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::MalformedFrame: return "MalformedFrame";
    case ErrorCode::FieldRange: return "FieldRange";
    case ErrorCode::IncompleteGroup: return "IncompleteGroup";
    case ErrorCode::InconsistentTotals: return "InconsistentTotals";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::OverlapError: return "OverlapError";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::UncoveredEpoch: return "UncoveredEpoch";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out;
  if (d.line_number != 0) {
    out += "line " + std::to_string(d.line_number) + ": ";
  }
  out += error_code_name(d.code);
  if (!d.message.empty()) {
    out += ": ";
    out += d.message;
  }
  return out;
}

}  // namespace nmeascene
