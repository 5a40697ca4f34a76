// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <vector>

#include "classifier.hpp"
#include "error.hpp"
#include "sites.hpp"

using namespace nmeascene;
using namespace nmeascene::classify;

namespace {

epoch::EpochMetrics metrics(double sum, std::optional<double> mean, int count,
                            double pdop = 99.99, double hdop = 99.99) {
  epoch::EpochMetrics m;
  m.cn0_sum = sum;
  m.cn0_mean = mean;
  m.satellite_count = count;
  m.has_measurement = count > 0;
  m.pdop = pdop;
  m.hdop = hdop;
  return m;
}

epoch::EpochMetrics sum_only(double sum) { return metrics(sum, 30.0, 10); }

const RuleSet kSum = RuleSet::defaults(Mode::SumOnly);
const RuleSet kCombined = RuleSet::defaults(Mode::Combined);

// Random vectors that are internally consistent: sum = mean * count.
epoch::EpochMetrics random_metrics(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> count(0, 20);
  std::uniform_real_distribution<double> mean(1.0, 55.0);
  std::uniform_real_distribution<double> dop(0.5, 60.0);
  std::bernoulli_distribution sentinel(0.3);
  const int n = count(gen);
  if (n == 0) return metrics(0.0, std::nullopt, 0);
  const double mu = mean(gen);
  const double pdop = sentinel(gen) ? 99.99 : dop(gen);
  const double hdop = pdop == 99.99 ? 99.99 : std::min(pdop, dop(gen));
  return metrics(mu * n, mu, n, pdop, hdop);
}

}  // namespace

TEST_CASE("scenario and mode names") {
  for (int s = 0; s < kScenarioCount; ++s) {
    auto sc = static_cast<Scenario>(s);
    CHECK(scenario_from_name(scenario_name(sc)) == sc);
  }
  CHECK(scenario_name(Scenario::IndoorNearOpening) == "indoor_near_opening");
  CHECK_FALSE(scenario_from_name("outdoors"));
  CHECK(mode_from_name("sum") == Mode::SumOnly);
  CHECK(mode_from_name("combined") == Mode::Combined);
  CHECK_FALSE(mode_from_name("both"));
}

TEST_CASE("sum-only bands and boundaries") {
  CHECK(classify_sum_only(sum_only(528.60), kSum) == Scenario::OpenOutdoor);
  CHECK(classify_sum_only(sum_only(350.00), kSum) == Scenario::OpenOutdoor);
  CHECK(classify_sum_only(sum_only(349.99), kSum) == Scenario::ObstructedOutdoor);
  CHECK(classify_sum_only(sum_only(200.00), kSum) == Scenario::ObstructedOutdoor);
  CHECK(classify_sum_only(sum_only(199.99), kSum) == Scenario::IndoorNearOpening);
  CHECK(classify_sum_only(sum_only(100.00), kSum) == Scenario::IndoorNearOpening);
  CHECK(classify_sum_only(sum_only(99.99), kSum) == Scenario::Indoor);
  CHECK(classify_sum_only(sum_only(45.66), kSum) == Scenario::Indoor);
  CHECK(classify_sum_only(metrics(0.0, std::nullopt, 0), kSum) == Scenario::Indoor);
}

TEST_CASE("sum-only label never moves indoors as the sum grows") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> sum(0.0, 800.0);
  for (int i = 0; i < 10000; ++i) {
    double a = sum(gen), b = sum(gen);
    if (a > b) std::swap(a, b);
    REQUIRE(static_cast<int>(classify_sum_only(sum_only(b), kSum)) <=
            static_cast<int>(classify_sum_only(sum_only(a), kSum)));
    REQUIRE(classify_sum_only(sum_only(a), kSum) != Scenario::Indeterminate);
  }
}

TEST_CASE("combined rules on site rows") {
  CHECK(classify_combined(metrics(528.60, 38.84, 14, 1.91, 0.87), kCombined) == Scenario::OpenOutdoor);
  CHECK(classify_combined(metrics(172.95, 21.55, 8, 2.89, 1.42), kCombined) == Scenario::Indeterminate);
  CHECK(classify_combined(metrics(21.77, 20.84, 1), kCombined) == Scenario::Indoor);
  CHECK(classify_combined(metrics(0.0, std::nullopt, 0), kCombined) == Scenario::Indoor);
}

TEST_CASE("combined boundaries") {
  CHECK(classify_combined(metrics(350.0, 30.0, 12, 7.0, 7.0), kCombined) == Scenario::OpenOutdoor);
  CHECK(classify_combined(metrics(350.0, 30.0, 12, 7.01, 7.0), kCombined) == Scenario::Indeterminate);
  CHECK(classify_combined(metrics(200.0, 20.0, 10), kCombined) == Scenario::ObstructedOutdoor);
  CHECK(classify_combined(metrics(300.0, 30.0, 10), kCombined) == Scenario::Indeterminate);
  CHECK(classify_combined(metrics(100.0, 20.0, 5, 7.01, 7.01), kCombined) == Scenario::IndoorNearOpening);
  CHECK(classify_combined(metrics(100.0, 20.0, 5, 7.0, 7.01), kCombined) == Scenario::Indeterminate);
  CHECK(classify_combined(metrics(99.0, 24.99, 4, 1.0, 1.0), kCombined) == Scenario::Indoor);
  CHECK(classify_combined(metrics(99.0, 25.0, 4, 1.0, 1.0), kCombined) == Scenario::Indeterminate);
  CHECK(classify_combined(metrics(99.0, 33.0, 3, 1.0, 1.0), kCombined) == Scenario::Indoor);
}

TEST_CASE("few satellites outside the indoor band") {
  const auto conflict = metrics(120.0, 40.0, 3);
  CHECK(classify_combined(conflict, kCombined) == Scenario::IndoorNearOpening);

  RuleSet override_rules = kCombined;
  override_rules.set("sat_override_any_sum", "1");
  CHECK(classify_combined(conflict, override_rules) == Scenario::Indoor);
  CHECK(classify_combined(metrics(21.77, 20.84, 1), override_rules) == Scenario::Indoor);
}

TEST_CASE("combined labels agree with sum-only labels when not indeterminate") {
  std::mt19937_64 gen(4242);
  for (int i = 0; i < 20000; ++i) {
    const auto m = random_metrics(gen);
    const Scenario c = classify_combined(m, kCombined);
    if (c != Scenario::Indeterminate) REQUIRE(c == classify_sum_only(m, kSum));
  }
}

TEST_CASE("site row means under both rule sets") {
  const std::vector<std::string_view> indeterminate{"C-2", "C-6", "C-7", "C-9"};
  for (const auto& site : sites::site_table()) {
    const auto m = sites::site_mean_metrics(site);
    CAPTURE(site.label);
    CHECK(classify_sum_only(m, kSum) == site.scenario);
    const bool expect_indeterminate =
        std::find(indeterminate.begin(), indeterminate.end(), site.label) != indeterminate.end();
    CHECK(classify_combined(m, kCombined) ==
          (expect_indeterminate ? Scenario::Indeterminate : site.scenario));
  }
}

TEST_CASE("round half up") {
  CHECK(round_half_up_count(13.61) == 14);
  CHECK(round_half_up_count(4.5) == 5);
  CHECK(round_half_up_count(4.49) == 4);
  CHECK(round_half_up_count(1.05) == 1);
}

TEST_CASE("rule overrides and validation") {
  RuleSet r = kSum;
  r.load("# tighter open band\nsum_open = 400\nmode=combined\n");
  CHECK(r.mode == Mode::Combined);
  CHECK(r.thresholds.sum_open == 400.0);
  CHECK(classify_sum_only(sum_only(380.0), r) == Scenario::ObstructedOutdoor);

  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Ok;
  };
  CHECK(code_of([] { RuleSet x; x.load("sum_open=150"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { RuleSet x; x.load("bogus=1"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { RuleSet x; x.load("min_sats=3.5"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { RuleSet x; x.load("dop_max=abc"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { RuleSet x; x.load("mode=other"); }) == ErrorCode::ConfigError);

  RuleSet round;
  round.load(kCombined.to_config());
  CHECK(round.to_config() == kCombined.to_config());
}

TEST_CASE("smoothing") {
  using S = Scenario;
  const std::vector<S> aba{S::OpenOutdoor, S::Indoor, S::OpenOutdoor};
  CHECK(smooth_labels(aba, 3) == std::vector<S>{S::OpenOutdoor, S::OpenOutdoor, S::OpenOutdoor});
  CHECK(smooth_labels(aba, 1) == aba);

  // Truncated windows at the ends tie 1-1: the unsmoothed label stays.
  const std::vector<S> ab{S::Indoor, S::OpenOutdoor};
  CHECK(smooth_labels(ab, 3) == ab);

  // Three-way tie without the own label: lowest value wins.
  const std::vector<S> tie{S::OpenOutdoor, S::OpenOutdoor, S::Indoor, S::ObstructedOutdoor,
                           S::ObstructedOutdoor};
  CHECK(smooth_labels(tie, 5)[2] == S::OpenOutdoor);

  for (int w : {0, 2, -1}) CHECK_THROWS_AS(smooth_labels(aba, w), Error);
}

TEST_CASE("smoothing keeps length and agrees with a direct majority count") {
  std::mt19937_64 gen(8);
  std::uniform_int_distribution<int> label(0, kScenarioCount - 1);
  std::uniform_int_distribution<int> length(0, 60);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Scenario> in(static_cast<std::size_t>(length(gen)));
    for (auto& s : in) s = static_cast<Scenario>(label(gen));
    for (int w : {1, 3, 5, 9}) {
      const auto out = smooth_labels(in, w);
      REQUIRE(out.size() == in.size());
      const int n = static_cast<int>(in.size());
      for (int i = 0; i < n; ++i) {
        int counts[kScenarioCount] = {};
        for (int j = std::max(0, i - w / 2); j <= std::min(n - 1, i + w / 2); ++j) {
          ++counts[static_cast<int>(in[static_cast<std::size_t>(j)])];
        }
        const int got = counts[static_cast<int>(out[static_cast<std::size_t>(i)])];
        for (int c : counts) REQUIRE(got >= c);
      }
    }
  }
}

TEST_CASE("classify_stream keeps epoch indices") {
  std::vector<epoch::EpochMetrics> ms;
  for (int i = 0; i < 5; ++i) {
    auto m = sum_only(i == 2 ? 50.0 : 400.0);
    m.epoch_index = static_cast<std::size_t>(10 + i);
    ms.push_back(m);
  }
  auto raw = classify_stream(ms, kSum, 1);
  REQUIRE(raw.size() == 5);
  CHECK(raw[2].scenario == Scenario::Indoor);
  CHECK(raw[4].epoch_index == 14);
  auto smooth = classify_stream(ms, kSum, 3);
  CHECK(smooth[2].scenario == Scenario::OpenOutdoor);
}
