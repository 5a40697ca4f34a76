// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "synth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "counter_rng.hpp"
#include "error.hpp"
#include "kv_config.hpp"
#include "nmea.hpp"

namespace nmeascene::synth {

namespace {

constexpr int kMinSatsForFix = 4;
constexpr int kGsaSlots = 12;

// Fixed antenna position: 23 33.6000 S, 46 43.8000 W, 760 m.
constexpr const char* kPosition = "2333.6000,S,04643.8000,W";

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string utc_field(std::size_t epoch_index) {
  const std::size_t t = (12 * 3600 + epoch_index) % 86400;
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02zu%02zu%02zu.00", t / 3600, (t / 60) % 60, t % 60);
  return buf;
}

// Shortest text that reads back to the same double.
std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

struct DrawnSatellite {
  int prn;
  double cn0;
};

}  // namespace

void ScenarioProfile::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::ConfigError, what);
  };
  require(cn0_mean_sigma >= 0 && sat_count_sigma >= 0 && pdop_sigma >= 0 && hdop_sigma >= 0,
          "profile sigmas must be >= 0");
  require(sat_count_mu >= 0, "sat_count_mu must be >= 0");
  require(missing_epoch_rate >= 0 && missing_epoch_rate <= 1,
          "missing_epoch_rate must lie in [0, 1]");
}

std::string ScenarioProfile::to_config() const {
  std::ostringstream os;
  os << "name=" << name << '\n';
  if (scenario) os << "scenario=" << classify::scenario_name(*scenario) << '\n';
  os << "cn0_mean_mu=" << shortest(cn0_mean_mu) << '\n'
     << "cn0_mean_sigma=" << shortest(cn0_mean_sigma) << '\n'
     << "sat_count_mu=" << shortest(sat_count_mu) << '\n'
     << "sat_count_sigma=" << shortest(sat_count_sigma) << '\n'
     << "pdop_mu=" << shortest(pdop_mu) << '\n'
     << "pdop_sigma=" << shortest(pdop_sigma) << '\n'
     << "hdop_mu=" << shortest(hdop_mu) << '\n'
     << "hdop_sigma=" << shortest(hdop_sigma) << '\n'
     << "missing_epoch_rate=" << shortest(missing_epoch_rate) << '\n';
  return os.str();
}

ScenarioProfile ScenarioProfile::from_config(std::string_view text) {
  ScenarioProfile p;
  bool seen[9] = {};
  for (const auto& [key, value] : parse_key_values(text)) {
    if (key == "name") {
      p.name = value;
      continue;
    }
    if (key == "scenario") {
      auto s = classify::scenario_from_name(value);
      if (!s || *s == classify::Scenario::Indeterminate) {
        throw Error(ErrorCode::ConfigError, "unknown scenario: " + value);
      }
      p.scenario = s;
      continue;
    }
    static constexpr std::string_view kKeys[9] = {
        "cn0_mean_mu", "cn0_mean_sigma", "sat_count_mu",    "sat_count_sigma",
        "pdop_mu",     "pdop_sigma",     "hdop_mu",         "hdop_sigma",
        "missing_epoch_rate"};
    double* slots[9] = {&p.cn0_mean_mu, &p.cn0_mean_sigma, &p.sat_count_mu,
                        &p.sat_count_sigma, &p.pdop_mu, &p.pdop_sigma,
                        &p.hdop_mu, &p.hdop_sigma, &p.missing_epoch_rate};
    auto it = std::find(std::begin(kKeys), std::end(kKeys), key);
    if (it == std::end(kKeys)) throw Error(ErrorCode::ConfigError, "unknown profile key: " + key);
    const auto i = static_cast<std::size_t>(it - std::begin(kKeys));
    *slots[i] = config_number(key, value);
    seen[i] = true;
  }
  for (bool s : seen) {
    if (!s) throw Error(ErrorCode::ConfigError, "profile is missing required keys");
  }
  p.validate();
  return p;
}

ScenarioProfile ScenarioProfile::from_site(const sites::SiteStatistics& site) {
  ScenarioProfile p;
  p.name = std::string(site.name);
  p.scenario = site.scenario;
  p.cn0_mean_mu = site.cn0_mean.mean;
  p.cn0_mean_sigma = site.cn0_mean.sd;
  p.sat_count_mu = site.satellites.mean;
  p.sat_count_sigma = site.satellites.sd;
  p.pdop_mu = site.pdop.mean;
  p.pdop_sigma = site.pdop.sd;
  p.hdop_mu = site.hdop.mean;
  p.hdop_sigma = site.hdop.sd;
  p.missing_epoch_rate = static_cast<double>(site.epochs_without) /
                         static_cast<double>(site.epochs_with + site.epochs_without);
  return p;
}

std::optional<ScenarioProfile> builtin_profile(std::string_view name) {
  auto site = sites::find_site(name);
  if (!site) return std::nullopt;
  return ScenarioProfile::from_site(*site);
}

ScenarioProfile resolve_profile(const std::string& name_or_path) {
  if (auto p = builtin_profile(name_or_path)) return *p;
  return ScenarioProfile::from_config(read_text_file(name_or_path));
}

std::vector<int> GeneratorConfig::default_prn_pool() {
  std::vector<int> pool(32);
  std::iota(pool.begin(), pool.end(), 1);
  return pool;
}

void GeneratorConfig::validate() const {
  profile.validate();
  if (epochs < 1) throw Error(ErrorCode::ConfigError, "epochs must be >= 1");
  if (prn_pool.empty()) throw Error(ErrorCode::ConfigError, "prn_pool is empty");
  std::vector<int> sorted = prn_pool;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1 || sorted.back() > 32) {
    throw Error(ErrorCode::ConfigError, "GPS PRNs must lie in 1..32");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::ConfigError, "prn_pool has duplicates");
  }
  // The pool must hold the satellite count up to three sigmas out.
  const double plausible =
      std::min(32.0, std::ceil(profile.sat_count_mu + 3.0 * profile.sat_count_sigma));
  if (static_cast<double>(prn_pool.size()) < plausible) {
    throw Error(ErrorCode::ConfigError, "prn_pool is smaller than the plausible satellite count");
  }
}

namespace {

std::vector<std::string> emit_epoch(const GeneratorConfig& config, std::size_t epoch_index) {
  const ScenarioProfile& p = config.profile;
  CounterRng rng(config.seed, epoch_index);
  std::vector<std::string> out;
  const std::string time = utc_field(epoch_index);

  if (rng.uniform() < p.missing_epoch_rate) {
    out.push_back(nmea::frame_sentence("GPGGA," + time + ",,,,,0,00,,,M,,M,,"));
    return out;
  }

  const auto pool_size = static_cast<int>(config.prn_pool.size());
  const int n = std::clamp(classify::round_half_up_count(rng.gaussian(p.sat_count_mu, p.sat_count_sigma)),
                           0, pool_size);
  double pdop = clamp(rng.gaussian(p.pdop_mu, p.pdop_sigma), kMinDop, nmea::kNoFixDop);
  double hdop = clamp(rng.gaussian(p.hdop_mu, p.hdop_sigma), kMinDop, nmea::kNoFixDop);
  if (hdop > pdop) std::swap(pdop, hdop);

  std::vector<int> pool = config.prn_pool;
  for (int i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(pool_size - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  std::vector<DrawnSatellite> sats;
  sats.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sats.push_back({pool[static_cast<std::size_t>(i)],
                    clamp(rng.gaussian(p.cn0_mean_mu, p.cn0_mean_sigma), 0.0, kMaxCn0)});
  }
  std::sort(sats.begin(), sats.end(), [](const auto& a, const auto& b) { return a.prn < b.prn; });

  const bool fix = n >= kMinSatsForFix;
  double vdop = nmea::kNoFixDop;
  if (fix) {
    pdop = std::round(pdop * 100.0) / 100.0;
    hdop = std::round(hdop * 100.0) / 100.0;
    vdop = std::sqrt(std::max(pdop * pdop - hdop * hdop, 0.0));
  } else {
    pdop = hdop = nmea::kNoFixDop;
  }

  // GGA
  std::string gga = "GPGGA," + time + ',';
  if (fix) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ",1,%02d,", std::min(n, kGsaSlots));
    gga += kPosition;
    gga += buf;
    gga += fmt("%.2f", hdop) + ",760.0,M,-5.0,M,,";
  } else {
    gga += ",,,,0,00,,,M,,M,,";
  }
  out.push_back(nmea::frame_sentence(gga));

  // GSA
  std::string gsa = fix ? "GPGSA,A,3" : "GPGSA,A,1";
  for (int slot = 0; slot < kGsaSlots; ++slot) {
    gsa += ',';
    if (fix && slot < n) {
      char prn[8];
      std::snprintf(prn, sizeof prn, "%02d", sats[static_cast<std::size_t>(slot)].prn);
      gsa += prn;
    }
  }
  gsa += ',' + fmt("%.2f", pdop) + ',' + fmt("%.2f", hdop) + ',' + fmt("%.2f", vdop);
  out.push_back(nmea::frame_sentence(gsa));

  // GSV, four satellites per part
  const int parts = std::max(1, (n + kSatellitesPerGsv - 1) / kSatellitesPerGsv);
  for (int part = 0; part < parts; ++part) {
    char head[32];
    std::snprintf(head, sizeof head, "GPGSV,%d,%d,%02d", parts, part + 1, n);
    std::string gsv = head;
    for (int k = part * kSatellitesPerGsv; k < std::min(n, (part + 1) * kSatellitesPerGsv); ++k) {
      const auto& s = sats[static_cast<std::size_t>(k)];
      const int elevation = 5 + (s.prn * 47 + static_cast<int>(epoch_index / 600)) % 85;
      const int azimuth = (s.prn * 73) % 360;
      const int cn0 = static_cast<int>(std::floor(s.cn0 + 0.5));
      char sat[32];
      if (cn0 > 0) {
        std::snprintf(sat, sizeof sat, ",%02d,%02d,%03d,%02d", s.prn, elevation, azimuth, cn0);
      } else {
        std::snprintf(sat, sizeof sat, ",%02d,%02d,%03d,", s.prn, elevation, azimuth);
      }
      gsv += sat;
    }
    out.push_back(nmea::frame_sentence(gsv));
  }
  return out;
}

}  // namespace

std::vector<std::string> generate_epoch(const GeneratorConfig& config, std::size_t epoch_index) {
  config.validate();
  return emit_epoch(config, epoch_index);
}

std::string generate_log(const GeneratorConfig& config) {
  config.validate();
  std::string out;
  out.reserve(config.epochs * 256);
  for (std::size_t i = 0; i < config.epochs; ++i) {
    for (const auto& s : emit_epoch(config, i)) {
      out += s;
      out += "\r\n";
    }
  }
  return out;
}

}  // namespace nmeascene::synth
