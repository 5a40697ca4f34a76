// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "nmea.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace nmeascene::nmea {

namespace {

constexpr double kDopTolerance = 0.01;

std::optional<double> to_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::optional<int> to_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

std::optional<Constellation> talker_constellation(std::string_view talker) {
  if (talker == "GP") return Constellation::Gps;
  if (talker == "GL") return Constellation::Glonass;
  if (talker == "GA") return Constellation::Galileo;
  if (talker == "GB" || talker == "BD") return Constellation::Beidou;
  if (talker == "GN") return Constellation::Multi;
  if (talker == "GQ") return Constellation::Other;
  return std::nullopt;
}

// Collects FieldRange diagnostics while decoding one sentence.
class FieldReader {
 public:
  FieldReader(const RawSentence& raw, std::vector<Diagnostic>& diags)
      : raw_(raw), diags_(diags) {}

  std::string_view at(std::size_t i) const {
    return i < raw_.fields.size() ? std::string_view(raw_.fields[i])
                                  : std::string_view();
  }

  std::optional<double> number(std::size_t i, std::string_view name) {
    auto f = at(i);
    if (f.empty()) return std::nullopt;
    auto v = to_double(f);
    if (!v) flag(name, f, "not a number");
    return v;
  }

  std::optional<double> bounded(std::size_t i, std::string_view name,
                                double lo, double hi_inclusive) {
    auto v = number(i, name);
    if (v && (*v < lo || *v > hi_inclusive)) {
      flag(name, at(i), "out of range");
      return std::nullopt;
    }
    return v;
  }

  std::optional<int> integer(std::size_t i, std::string_view name) {
    auto f = at(i);
    if (f.empty()) return std::nullopt;
    auto v = to_int(f);
    if (!v) flag(name, f, "not an integer");
    return v;
  }

  void flag(std::string_view name, std::string_view value,
            std::string_view why) {
    std::string msg(raw_.type_tag);
    msg += " ";
    msg += name;
    msg += " '";
    msg += value;
    msg += "' ";
    msg += why;
    diags_.push_back({ErrorCode::FieldRange, std::move(msg), raw_.line_number});
  }

 private:
  const RawSentence& raw_;
  std::vector<Diagnostic>& diags_;
};

// ddmm.mmmm / dddmm.mmmm plus hemisphere into signed degrees.
std::optional<double> parse_coordinate(FieldReader& r, std::size_t value_idx,
                                       std::size_t hemi_idx, double limit,
                                       std::string_view name) {
  auto raw = r.number(value_idx, name);
  if (!raw) return std::nullopt;
  double degrees = std::floor(*raw / 100.0);
  double minutes = *raw - degrees * 100.0;
  double v = degrees + minutes / 60.0;
  if (*raw < 0 || minutes >= 60.0 || v > limit) {
    r.flag(name, r.at(value_idx), "out of range");
    return std::nullopt;
  }
  auto hemi = r.at(hemi_idx);
  if (hemi == "S" || hemi == "W") {
    v = -v;
  } else if (hemi != "N" && hemi != "E") {
    r.flag(name, hemi, "bad hemisphere");
    return std::nullopt;
  }
  return v;
}

std::optional<TimeOfDay> parse_time(FieldReader& r, std::size_t idx) {
  auto f = r.at(idx);
  if (f.empty()) return std::nullopt;
  if (f.size() < 6) {
    r.flag("utc_time", f, "too short");
    return std::nullopt;
  }
  auto h = to_int(f.substr(0, 2));
  auto m = to_int(f.substr(2, 2));
  auto s = to_double(f.substr(4));
  if (!h || !m || !s || *h > 23 || *m > 59 || *s < 0 || *s >= 61.0) {
    r.flag("utc_time", f, "out of range");
    return std::nullopt;
  }
  return TimeOfDay{*h, *m, *s};
}

GgaRecord decode_gga(const RawSentence& raw, std::vector<Diagnostic>& diags) {
  FieldReader r(raw, diags);
  GgaRecord rec;
  FixData& fix = rec.fix;
  fix.utc_time = parse_time(r, 0);
  fix.latitude_deg = parse_coordinate(r, 1, 2, 90.0, "latitude");
  fix.longitude_deg = parse_coordinate(r, 3, 4, 180.0, "longitude");
  if (auto q = r.integer(5, "fix_quality"); q && *q >= 0) {
    fix.fix_quality = *q;
  } else if (q) {
    r.flag("fix_quality", r.at(5), "out of range");
  }
  if (auto n = r.integer(6, "satellites_used"); n && *n >= 0) {
    fix.satellites_used = *n;
  } else if (n) {
    r.flag("satellites_used", r.at(6), "out of range");
  }
  fix.hdop = r.bounded(7, "hdop", 0.0, 1e6);
  fix.altitude_m = r.number(8, "altitude");
  return rec;
}

GsaRecord decode_gsa(const RawSentence& raw, std::vector<Diagnostic>& diags) {
  FieldReader r(raw, diags);
  GsaRecord rec;
  auto mode = r.at(0);
  rec.selection_mode = mode.empty() ? 'A' : mode.front();
  if (auto t = r.integer(1, "fix_type"); t && *t >= 1 && *t <= 3) {
    rec.fix_type = *t;
  } else if (t) {
    r.flag("fix_type", r.at(1), "out of range");
  }
  for (std::size_t i = 2; i < 14; ++i) {
    if (auto prn = r.integer(i, "prn"); prn && *prn > 0) {
      rec.prns.push_back(*prn);
    }
  }
  auto pdop = r.bounded(14, "pdop", 0.0, 1e6);
  auto hdop = r.bounded(15, "hdop", 0.0, 1e6);
  auto vdop = r.bounded(16, "vdop", 0.0, 1e6);
  if (pdop && hdop) {
    rec.dop = DopValues{*pdop, *hdop, vdop};
    if (*hdop > *pdop + kDopTolerance) {
      r.flag("hdop", r.at(15), "exceeds pdop");
    }
  }
  return rec;
}

GsvRecord decode_gsv(const RawSentence& raw, std::vector<Diagnostic>& diags) {
  FieldReader r(raw, diags);
  GsvRecord rec;
  rec.total_messages = r.integer(0, "total_messages").value_or(0);
  rec.message_number = r.integer(1, "message_number").value_or(0);
  rec.satellites_in_view = r.integer(2, "satellites_in_view").value_or(0);
  const std::size_t n = raw.fields.size();
  // NMEA 4.10 appends a signal ID, leaving one trailing field.
  const std::size_t blocks = (n - 3) / 4;
  if ((n - 3) % 4 > 1) {
    r.flag("satellite block", "", "truncated");
  }
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t base = 3 + 4 * b;
    auto prn = r.integer(base, "prn");
    if (!prn) continue;  // padding block
    if (*prn <= 0) {
      r.flag("prn", r.at(base), "out of range");
      continue;
    }
    SatelliteObservation sat;
    sat.prn = *prn;
    sat.constellation = raw.constellation;
    sat.elevation_deg = r.bounded(base + 1, "elevation", 0.0, 90.0);
    sat.azimuth_deg = r.bounded(base + 2, "azimuth", 0.0, 359.999999);
    sat.cn0_dbhz = r.bounded(base + 3, "cn0", 0.0, 99.0);
    rec.satellites.push_back(sat);
  }
  return rec;
}

std::string fmt_opt(const std::optional<double>& v, const char* spec = "%.2f") {
  if (!v) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, *v);
  return buf;
}

}  // namespace

std::string_view constellation_name(Constellation c) noexcept {
  switch (c) {
    case Constellation::Gps: return "gps";
    case Constellation::Glonass: return "glonass";
    case Constellation::Galileo: return "galileo";
    case Constellation::Beidou: return "beidou";
    case Constellation::Multi: return "multi";
    case Constellation::Other: return "other";
  }
  return "other";
}

std::uint8_t checksum_byte(std::string_view payload) noexcept {
  std::uint8_t sum = 0;
  for (char c : payload) sum ^= static_cast<std::uint8_t>(c);
  return sum;
}

std::string compute_checksum(std::string_view payload) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  const std::uint8_t sum = checksum_byte(payload);
  return {kHex[sum >> 4], kHex[sum & 0x0F]};
}

std::string frame_sentence(std::string_view payload) {
  std::string out;
  out.reserve(payload.size() + 4);
  out += '$';
  out += payload;
  out += '*';
  out += compute_checksum(payload);
  return out;
}

ParseResult parse_sentence(std::string_view line, const ParsePolicy& policy,
                           std::size_t line_number) {
  auto fail = [&](ErrorCode code, std::string msg) -> ParseResult {
    return ParseError{code, std::move(msg), line_number};
  };

  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  for (char c : line) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80 || u < 0x20 || u == 0x7F) {
      return fail(ErrorCode::MalformedFrame, "non-printable or non-ASCII byte");
    }
  }
  if (line.empty() || line.front() != '$') {
    return fail(ErrorCode::MalformedFrame, "missing '$'");
  }

  std::string_view body = line.substr(1);
  std::optional<std::string> checksum;
  if (auto star = body.find('*'); star != std::string_view::npos) {
    auto tail = body.substr(star + 1);
    body = body.substr(0, star);
    if (tail.size() != 2 || hex_value(tail[0]) < 0 || hex_value(tail[1]) < 0) {
      return fail(ErrorCode::MalformedFrame, "checksum is not two hex digits");
    }
    const int expected = hex_value(tail[0]) * 16 + hex_value(tail[1]);
    const int actual = checksum_byte(body);
    if (expected != actual) {
      char msg[64];
      std::snprintf(msg, sizeof msg, "expected %02X, computed %02X", expected,
                    actual);
      return fail(ErrorCode::ChecksumMismatch, msg);
    }
    checksum = std::string(tail);
    std::transform(checksum->begin(), checksum->end(), checksum->begin(),
                   [](char c) { return static_cast<char>(std::toupper(c)); });
  } else if (policy.strict_checksum) {
    return fail(ErrorCode::ChecksumMismatch, "missing checksum");
  }
  if (body.find('$') != std::string_view::npos) {
    return fail(ErrorCode::MalformedFrame, "embedded '$'");
  }

  Sentence s;
  s.raw.line_number = line_number;
  s.raw.text = std::string(line);
  s.raw.checksum = std::move(checksum);

  auto comma = body.find(',');
  std::string_view address = body.substr(0, comma);
  if (comma != std::string_view::npos) {
    std::string_view rest = body.substr(comma + 1);
    while (true) {
      auto next = rest.find(',');
      s.raw.fields.emplace_back(rest.substr(0, next));
      if (next == std::string_view::npos) break;
      rest.remove_prefix(next + 1);
    }
  }

  if (!address.empty() && address.front() == 'P') {
    s.raw.talker = "P";
    s.raw.type_tag = std::string(address.substr(1));
    s.body = Unhandled{};
    return s;
  }
  if (address.size() != 5) {
    return fail(ErrorCode::MalformedFrame, "address field is not 5 characters");
  }
  s.raw.talker = std::string(address.substr(0, 2));
  s.raw.type_tag = std::string(address.substr(2));

  auto constellation = talker_constellation(s.raw.talker);
  s.raw.constellation = constellation.value_or(Constellation::Other);
  const bool talker_ok =
      constellation && (*constellation == Constellation::Gps ||
                        policy.accept_multi_constellation);

  const std::string& tag = s.raw.type_tag;
  const bool handled_tag = tag == "GGA" || tag == "GSA" || tag == "GSV";
  if (!handled_tag) {
    s.body = Unhandled{};
    return s;
  }
  if (!talker_ok) {
    s.body = Unhandled{};
    s.diagnostics.push_back({ErrorCode::InvalidArgument,
                             "TalkerRejected: " + s.raw.talker + tag,
                             line_number});
    return s;
  }

  const std::size_t n = s.raw.fields.size();
  if (tag == "GGA") {
    if (n < 9) return fail(ErrorCode::MalformedFrame, "GGA has too few fields");
    s.body = decode_gga(s.raw, s.diagnostics);
  } else if (tag == "GSA") {
    if (n < 17) return fail(ErrorCode::MalformedFrame, "GSA has too few fields");
    s.body = decode_gsa(s.raw, s.diagnostics);
  } else {
    if (n < 3) return fail(ErrorCode::MalformedFrame, "GSV has too few fields");
    s.body = decode_gsv(s.raw, s.diagnostics);
  }
  return s;
}

GsvAssembly assemble_gsv(std::span<const GsvRecord> group) {
  GsvAssembly out;
  if (group.empty()) return out;

  const int total = group.front().total_messages;
  const int in_view = group.front().satellites_in_view;
  bool inconsistent = false;
  for (const auto& part : group) {
    if (part.total_messages != total || part.satellites_in_view != in_view) {
      inconsistent = true;
    }
  }
  if (inconsistent) {
    out.diagnostics.push_back({ErrorCode::InconsistentTotals,
                               "GSV parts disagree on message or satellite totals",
                               0});
  }

  int expected_next = 1;
  bool in_order = true;
  std::vector<bool> seen(static_cast<std::size_t>(std::max(total, 0)) + 1, false);
  for (const auto& part : group) {
    if (part.message_number != expected_next) in_order = false;
    expected_next = part.message_number + 1;
    if (part.message_number >= 1 && part.message_number <= total) {
      seen[static_cast<std::size_t>(part.message_number)] = true;
    }
    for (const auto& sat : part.satellites) out.satellites.push_back(sat);
  }
  int missing = 0;
  for (int m = 1; m <= total; ++m) {
    if (!seen[static_cast<std::size_t>(m)]) ++missing;
  }
  if (missing > 0 || !in_order || static_cast<int>(group.size()) != total) {
    out.diagnostics.push_back(
        {ErrorCode::IncompleteGroup,
         "GSV group has " + std::to_string(group.size()) + " of " +
             std::to_string(total) + " parts" +
             (in_order ? "" : " (out of sequence)"),
         0});
  }
  if (in_view >= 0 && out.satellites.size() > static_cast<std::size_t>(in_view)) {
    out.diagnostics.push_back({ErrorCode::InconsistentTotals,
                               "more satellite entries than satellites in view",
                               0});
    out.satellites.resize(static_cast<std::size_t>(in_view));
  }
  return out;
}

std::string describe(const Sentence& s) {
  std::ostringstream os;
  os << s.raw.talker << s.raw.type_tag << ' ';
  std::visit(
      [&](const auto& rec) {
        using T = std::decay_t<decltype(rec)>;
        if constexpr (std::is_same_v<T, Unhandled>) {
          os << "unhandled";
        } else if constexpr (std::is_same_v<T, GgaRecord>) {
          const auto& f = rec.fix;
          os << "fix_quality=" << f.fix_quality
             << " satellites_used=" << f.satellites_used
             << " lat=" << fmt_opt(f.latitude_deg, "%.6f")
             << " lon=" << fmt_opt(f.longitude_deg, "%.6f")
             << " alt=" << fmt_opt(f.altitude_m, "%.1f")
             << " hdop=" << fmt_opt(f.hdop);
        } else if constexpr (std::is_same_v<T, GsaRecord>) {
          os << "fix_type=" << rec.fix_type << " prns=" << rec.prns.size();
          if (rec.dop) {
            os << " pdop=" << fmt_opt(rec.dop->pdop)
               << " hdop=" << fmt_opt(rec.dop->hdop)
               << " vdop=" << fmt_opt(rec.dop->vdop);
          } else {
            os << " dop=-";
          }
        } else {
          os << "part=" << rec.message_number << '/' << rec.total_messages
             << " in_view=" << rec.satellites_in_view << " sats=[";
          bool first = true;
          for (const auto& sat : rec.satellites) {
            if (!first) os << ' ';
            first = false;
            os << sat.prn << ':' << fmt_opt(sat.cn0_dbhz, "%.0f");
          }
          os << ']';
        }
      },
      s.body);
  for (const auto& d : s.diagnostics) os << " [" << format_diagnostic(d) << ']';
  return os.str();
}

}  // namespace nmeascene::nmea
