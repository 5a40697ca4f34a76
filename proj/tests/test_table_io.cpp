// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <string>

#include "error.hpp"
#include "table_io.hpp"

using namespace nmeascene;
using namespace nmeascene::table_io;

namespace {

epoch::EpochMetrics sample(std::size_t idx, int count) {
  epoch::EpochMetrics m;
  m.epoch_index = idx;
  m.satellite_count = count;
  m.has_measurement = count > 0;
  if (count > 0) {
    m.cn0_sum = 35.25 * count;
    m.cn0_mean = 35.25;
    m.pdop = 1.9;
    m.hdop = 0.87;
  }
  return m;
}

}  // namespace

TEST_CASE("metrics rows") {
  CHECK(format_metrics(sample(3, 4), Format::Csv) == "3,141.00,35.25,1.90,0.87,4,true");
  CHECK(format_metrics(sample(4, 0), Format::Csv) == "4,0.00,,99.99,99.99,0,false");
  CHECK(format_metrics(sample(4, 0), Format::JsonLines) ==
        R"({"epoch":4,"cn0_sum":0.0,"cn0_mean":null,"pdop":99.99,"hdop":99.99,"sat_count":0,"has_measurement":false})");
}

TEST_CASE("label rows") {
  classify::EpochLabel l{7, classify::Scenario::ObstructedOutdoor};
  CHECK(format_label(l, Format::Csv) == "7,obstructed_outdoor");
  CHECK(format_label(l, Format::JsonLines) == R"({"epoch":7,"scenario":"obstructed_outdoor"})");
}

TEST_CASE("metrics tables round trip in both formats") {
  std::vector<epoch::EpochMetrics> rows;
  for (std::size_t i = 0; i < 20; ++i) rows.push_back(sample(i, static_cast<int>(i % 5)));
  for (Format f : {Format::Csv, Format::JsonLines}) {
    std::string text = f == Format::Csv ? std::string(kMetricsHeader) + "\n" : "";
    for (const auto& m : rows) text += format_metrics(m, f) + "\n";
    CHECK(parse_metrics(text) == rows);
  }
}

TEST_CASE("label tables round trip in both formats") {
  std::vector<classify::EpochLabel> rows;
  for (std::size_t i = 0; i < 10; ++i) {
    rows.push_back({i, static_cast<classify::Scenario>(i % classify::kScenarioCount)});
  }
  for (Format f : {Format::Csv, Format::JsonLines}) {
    std::string text = f == Format::Csv ? std::string(kLabelsHeader) + "\r\n" : "";
    for (const auto& l : rows) text += format_label(l, f) + "\r\n";
    CHECK(parse_labels(text) == rows);
  }
}

TEST_CASE("malformed tables name the line") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Ok;
  };
  CHECK(code_of([] { parse_metrics("epoch,cn0_sum\n1,2\n"); }) == ErrorCode::FormatError);
  CHECK(code_of([] { parse_metrics("1,2.0,,99.99,99.99,0,maybe\n"); }) == ErrorCode::FormatError);
  CHECK(code_of([] { parse_metrics("{\"epoch\":1}\n"); }) == ErrorCode::FormatError);
  CHECK(code_of([] { parse_labels("1,outside\n"); }) == ErrorCode::UnknownLabel);
  CHECK(code_of([] { parse_labels("x,indoor\n"); }) == ErrorCode::FormatError);
  try {
    parse_metrics(std::string(kMetricsHeader) + "\n0,1.00,1.00,1.00,1.00,1,true\n0,1.00\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
