// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "epoch.hpp"
#include "link_budget.hpp"
#include "nmea.hpp"
#include "site_summary.hpp"
#include "sites.hpp"
#include "synth.hpp"
#include "validation.hpp"

using namespace nmeascene;
using classify::Scenario;

namespace {

// Pinned sample sizes and tolerances.
constexpr int kPropertySamples = 100000;
constexpr int kChecksumSamples = 10000;
constexpr int kRoundTripSamples = 1000;
constexpr double kRoundTripTolDb = 1e-12;
constexpr std::size_t kSynthEpochs = 3600;
constexpr std::uint64_t kSynthSeed = 7;
constexpr double kMinMatchPct = 80.0;
constexpr double kMaxSynthSeconds = 10.0;
constexpr double kStandardErrors = 3.0;

// Sum-only matches over epochs with measurements for seed 7. Any drift
// here means the generator's output changed.
struct PinnedProfile {
  const char* name;
  std::size_t matches;
  std::size_t with_measurements;
};
constexpr std::array<PinnedProfile, 4> kPinned{{
    {"local_a1", 3504, 3518},  // 99.60%
    {"local_b2", 3038, 3600},  // 84.39%
    {"local_c2", 3260, 3600},  // 90.56%
    {"local_d3", 2310, 3576},  // 64.60%
}};

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* spec, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, spec, a, b, c);
  return buf;
}

const std::vector<std::string> kIndeterminateRows{"C-2", "C-6", "C-7", "C-9"};

void criterion_1() {
  const auto rules = classify::RuleSet::defaults(classify::Mode::SumOnly);
  int agree = 0;
  std::string misses;
  for (const auto& site : sites::site_table()) {
    if (classify::classify_sum_only(sites::site_mean_metrics(site), rules) == site.scenario) {
      ++agree;
    } else {
      misses += " " + std::string(site.label);
    }
  }
  report(1, agree == 40, "site rows, sum-only: " + std::to_string(agree) + "/40" + misses);
}

void criterion_2() {
  const auto rules = classify::RuleSet::defaults(classify::Mode::Combined);
  int agree = 0;
  std::string misses;
  for (const auto& site : sites::site_table()) {
    const bool indeterminate = std::find(kIndeterminateRows.begin(), kIndeterminateRows.end(),
                                         site.label) != kIndeterminateRows.end();
    const Scenario want = indeterminate ? Scenario::Indeterminate : site.scenario;
    if (classify::classify_combined(sites::site_mean_metrics(site), rules) == want) {
      ++agree;
    } else {
      misses += " " + std::string(site.label);
    }
  }
  report(2, agree == 40, "site rows, combined: " + std::to_string(agree) + "/40" + misses);
}

void criterion_3() {
  auto run = [](std::uint64_t total, std::uint64_t matches) {
    // Two truth intervals, mismatches spread over both.
    const std::size_t half = static_cast<std::size_t>(total / 2);
    const std::vector<validation::LabelInterval> truth{
        {0, half, Scenario::OpenOutdoor}, {half, static_cast<std::size_t>(total), Scenario::Indoor}};
    std::vector<classify::EpochLabel> pred;
    pred.reserve(static_cast<std::size_t>(total));
    for (std::size_t e = 0; e < total; ++e) {
      const Scenario t = e < half ? Scenario::OpenOutdoor : Scenario::Indoor;
      // Exactly total - matches epochs step the running floor.
      const std::uint64_t k = total - matches;
      const bool wrong = (e + 1) * k / total != e * k / total;
      pred.push_back({e, wrong ? Scenario::ObstructedOutdoor : t});
    }
    const auto r = validation::evaluate(pred, truth);
    return std::make_pair(r.matches, validation::percent_2dp(r.matches, r.total_epochs));
  };
  const auto one = run(82323, 80765);
  const auto two = run(82323, 73650);
  const bool ok = one.first == 80765 && one.second == "98.11" && two.first == 73650 &&
                  two.second == "89.46";
  report(3, ok, "accuracy " + one.second + "% (" + std::to_string(one.first) + " matches), " +
                    two.second + "% (" + std::to_string(two.first) + " matches)");
}

void criterion_4() {
  const auto sum_rules = classify::RuleSet::defaults(classify::Mode::SumOnly);
  const auto comb_rules = classify::RuleSet::defaults(classify::Mode::Combined);
  std::mt19937_64 gen(4);
  std::uniform_int_distribution<int> count(0, 24);
  std::uniform_real_distribution<double> cn0(0.5, 55.0);
  std::uniform_real_distribution<double> dop(0.5, 50.0);
  std::uniform_real_distribution<double> near(-15.0, 15.0);
  std::bernoulli_distribution sentinel(0.3), on_edge(0.2);
  const double edges[] = {100.0, 200.0, 350.0};
  int violations = 0, decided = 0;
  for (int i = 0; i < kPropertySamples; ++i) {
    epoch::EpochMetrics m;
    m.satellite_count = count(gen);
    for (int k = 0; k < m.satellite_count; ++k) m.cn0_sum += cn0(gen);
    if (on_edge(gen) && m.satellite_count > 0) {
      m.cn0_sum = edges[gen() % 3] + (gen() % 3 == 0 ? 0.0 : near(gen) * 0.01);
    }
    m.has_measurement = m.satellite_count > 0;
    if (m.has_measurement) m.cn0_mean = m.cn0_sum / m.satellite_count;
    m.pdop = sentinel(gen) ? 99.99 : dop(gen);
    m.hdop = m.pdop == 99.99 ? 99.99 : std::min(m.pdop, dop(gen));
    const Scenario c = classify::classify_combined(m, comb_rules);
    if (c == Scenario::Indeterminate) continue;
    ++decided;
    if (c != classify::classify_sum_only(m, sum_rules)) ++violations;
  }
  report(4, violations == 0,
         std::to_string(kPropertySamples) + " vectors, " + std::to_string(decided) +
             " decided, " + std::to_string(violations) + " disagreements");
}

void criterion_5() {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> len(0, 82);
  std::uniform_int_distribution<int> byte(0x20, 0x7E);
  int bad_checksums = 0;
  for (int i = 0; i < kChecksumSamples; ++i) {
    std::string s(static_cast<std::size_t>(len(gen)), ' ');
    unsigned oracle = 0;
    for (auto& c : s) {
      c = static_cast<char>(byte(gen));
      oracle ^= static_cast<unsigned char>(c);
    }
    char want[3];
    std::snprintf(want, sizeof want, "%02X", oracle);
    if (nmea::compute_checksum(s) != want) ++bad_checksums;
  }

  std::size_t sentences = 0, rejected = 0;
  for (const auto& site : sites::site_table()) {
    synth::GeneratorConfig cfg;
    cfg.profile = *synth::builtin_profile(site.name);
    cfg.epochs = 600;
    cfg.seed = kSynthSeed;
    const auto log = synth::generate_log(cfg);
    std::size_t pos = 0;
    while (pos < log.size()) {
      const auto end = log.find("\r\n", pos);
      auto r = nmea::parse_sentence(std::string_view(log).substr(pos, end - pos), {});
      ++sentences;
      if (!std::holds_alternative<nmea::Sentence>(r) ||
          !std::get<nmea::Sentence>(r).diagnostics.empty()) {
        ++rejected;
      }
      pos = end + 2;
    }
  }
  report(5, bad_checksums == 0 && rejected == 0,
         std::to_string(kChecksumSamples) + " payloads, " + std::to_string(bad_checksums) +
             " checksum mismatches; " + std::to_string(sentences) + " generated sentences, " +
             std::to_string(rejected) + " rejected by strict parsing");
}

void criterion_6() {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> value(-40.0, 70.0), bw(0.0, 90.0);
  double worst = 0.0;
  for (int i = 0; i < kRoundTripSamples; ++i) {
    const double x = value(gen), b = bw(gen);
    const double cn0 = link_budget::cn0_snr_convert(x, b, link_budget::Conversion::SnrToCn0);
    const double back = link_budget::cn0_snr_convert(cn0, b, link_budget::Conversion::Cn0ToSnr);
    worst = std::max(worst, std::fabs(back - x));
  }
  report(6, worst <= kRoundTripTolDb,
         std::to_string(kRoundTripSamples) + " pairs, worst error " + fmt("%.3g dB", worst));
}

struct SynthRun {
  std::string name;
  Scenario truth;
  std::vector<epoch::EpochMetrics> metrics;
  std::string log;
};

std::vector<SynthRun> synth_runs;
double synth_seconds = 0.0;

void generate_runs() {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& pin : kPinned) {
    synth::GeneratorConfig cfg;
    cfg.profile = *synth::builtin_profile(pin.name);
    cfg.epochs = kSynthEpochs;
    cfg.seed = kSynthSeed;
    SynthRun run{pin.name, *cfg.profile.scenario, {}, synth::generate_log(cfg)};
    run.metrics = epoch::stream_epochs(run.log);
    synth_runs.push_back(std::move(run));
  }
  synth_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion_7() {
  const auto rules = classify::RuleSet::defaults(classify::Mode::SumOnly);
  bool ok = synth_seconds < kMaxSynthSeconds;
  std::string detail = fmt("%.2f s;", synth_seconds);
  for (std::size_t i = 0; i < synth_runs.size(); ++i) {
    const auto& run = synth_runs[i];
    std::array<std::size_t, classify::kScenarioCount> votes{};
    std::size_t with = 0, matches = 0;
    for (const auto& m : run.metrics) {
      if (!m.has_measurement) continue;
      ++with;
      const Scenario s = classify::classify_sum_only(m, rules);
      ++votes[static_cast<std::size_t>(s)];
      matches += s == run.truth;
    }
    const auto majority = static_cast<Scenario>(
        std::max_element(votes.begin(), votes.end()) - votes.begin());
    const double pct = with == 0 ? 0.0 : 100.0 * static_cast<double>(matches) / static_cast<double>(with);
    const bool count_ok = run.metrics.size() == kSynthEpochs;
    const bool rate_ok = pct >= kMinMatchPct;
    const bool majority_ok = majority == run.truth;
    const bool pinned_ok =
        kPinned[i].matches == matches && kPinned[i].with_measurements == with;
    ok = ok && count_ok && rate_ok && majority_ok && pinned_ok;
    detail += " " + run.name + " " + std::to_string(run.metrics.size()) + " epochs " +
              std::to_string(matches) + "/" + std::to_string(with) + fmt(" = %.2f%%", pct) +
              (rate_ok ? "" : " (below 80%)") + (majority_ok ? "" : " (majority wrong)") +
              (pinned_ok ? "" : " (differs from pinned)") + ";";
  }
  report(7, ok, detail);
}

void criterion_8() {
  bool ok = true;
  std::string detail;
  for (const auto& run : synth_runs) {
    const auto s = summary::summarize(run.metrics);
    const auto profile = *synth::builtin_profile(run.name);
    const double se = s.cn0_mean.stddev / std::sqrt(static_cast<double>(s.cn0_mean.count));
    const double z = (s.cn0_mean.mean - profile.cn0_mean_mu) / se;
    synth::GeneratorConfig cfg;
    cfg.profile = profile;
    cfg.epochs = kSynthEpochs;
    cfg.seed = kSynthSeed;
    const bool deterministic = synth::generate_log(cfg) == run.log;
    const bool within = std::fabs(z) <= kStandardErrors;
    ok = ok && deterministic && within;
    detail += " " + run.name + fmt(" mean %.3f vs %.2f (z = %+.2f)", s.cn0_mean.mean,
                                   profile.cn0_mean_mu, z) +
              (deterministic ? "" : " (not deterministic)") + ";";
  }
  report(8, ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  generate_runs();
  criterion_7();
  criterion_8();
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
