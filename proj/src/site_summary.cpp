// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "site_summary.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace nmeascene::summary {

namespace {

// Welford's running mean/variance.
class Accumulator {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }
  ColumnStats stats() const {
    ColumnStats s;
    s.count = n_;
    s.mean = mean_;
    s.stddev = n_ == 0 ? 0.0 : std::sqrt(m2_ / static_cast<double>(n_));
    return s;
  }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

std::string row(const char* name, const ColumnStats& c) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-12s %8.2f ± %.2f\n", name, c.mean, c.stddev);
  return buf;
}

nlohmann::ordered_json col(const ColumnStats& c) {
  return {{"mean", c.mean}, {"std", c.stddev}, {"n", c.count}};
}

}  // namespace

SiteSummary summarize(std::span<const epoch::EpochMetrics> metrics) {
  Accumulator mean, sum, pdop, hdop, sats;
  SiteSummary s;
  for (const auto& m : metrics) {
    if (!m.has_measurement) {
      ++s.epochs_without_measurements;
      continue;
    }
    ++s.epochs_with_measurements;
    if (m.cn0_mean) mean.add(*m.cn0_mean);
    sum.add(m.cn0_sum);
    pdop.add(m.pdop);
    hdop.add(m.hdop);
    sats.add(static_cast<double>(m.satellite_count));
  }
  s.cn0_mean = mean.stats();
  s.cn0_sum = sum.stats();
  s.pdop = pdop.stats();
  s.hdop = hdop.stats();
  s.satellites = sats.stats();
  return s;
}

std::string summary_text(const SiteSummary& s) {
  std::string out;
  out += row("cn0_mean", s.cn0_mean);
  out += row("cn0_sum", s.cn0_sum);
  out += row("pdop", s.pdop);
  out += row("hdop", s.hdop);
  out += row("satellites", s.satellites);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-12s %zu (%zu)\n", "epochs", s.epochs_with_measurements,
                s.epochs_without_measurements);
  out += buf;
  return out;
}

std::string summary_json(const SiteSummary& s) {
  nlohmann::ordered_json j;
  j["cn0_mean"] = col(s.cn0_mean);
  j["cn0_sum"] = col(s.cn0_sum);
  j["pdop"] = col(s.pdop);
  j["hdop"] = col(s.hdop);
  j["satellites"] = col(s.satellites);
  j["epochs_with_measurements"] = s.epochs_with_measurements;
  j["epochs_without_measurements"] = s.epochs_without_measurements;
  return j.dump(2);
}

}  // namespace nmeascene::summary
