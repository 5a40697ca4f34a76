// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "nmeascene.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "epoch.hpp"
#include "error.hpp"
#include "link_budget.hpp"
#include "nmea.hpp"
#include "site_summary.hpp"
#include "synth.hpp"
#include "table_io.hpp"
#include "validation.hpp"

using namespace nmeascene;

struct nsc_string {
  std::string text;
};

struct nsc_pipeline {
  epoch::EpochStream stream;
  std::string partial;
  std::vector<Diagnostic> diagnostics;
  std::size_t next_diagnostic = 0;
};

struct nsc_metrics_table {
  std::vector<nsc_epoch_metrics> rows;
};

struct nsc_rules {
  classify::RuleSet rules;
};

struct nsc_prediction_table {
  std::vector<nsc_prediction> rows;
};

struct nsc_labels {
  std::vector<validation::LabelInterval> intervals;
};

struct nsc_report {
  validation::ValidationReport report;
};

struct nsc_profile {
  synth::ScenarioProfile profile;
};

namespace {

thread_local std::string g_last_error;

nsc_status to_status(ErrorCode c) { return static_cast<nsc_status>(static_cast<int>(c)); }

template <typename Fn>
nsc_status guard(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NSC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NSC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return NSC_ERR_INTERNAL;
  }
}

nsc_status invalid(const char* what) {
  g_last_error = what;
  return NSC_ERR_INVALID_ARGUMENT;
}

nsc_status emit(std::string text, nsc_string** out) {
  *out = new nsc_string{std::move(text)};
  return NSC_OK;
}

nmea::ParsePolicy to_policy(const nsc_parse_policy* p) {
  nmea::ParsePolicy policy;
  if (p) {
    policy.strict_checksum = p->strict_checksum != 0;
    policy.accept_multi_constellation = p->accept_multi_constellation != 0;
  }
  return policy;
}

nsc_epoch_metrics to_c(const epoch::EpochMetrics& m) {
  nsc_epoch_metrics c{};
  c.epoch = m.epoch_index;
  c.cn0_sum = m.cn0_sum;
  c.has_mean = m.cn0_mean.has_value();
  c.cn0_mean = m.cn0_mean.value_or(0.0);
  c.pdop = m.pdop;
  c.hdop = m.hdop;
  c.sat_count = m.satellite_count;
  c.has_measurement = m.has_measurement;
  return c;
}

epoch::EpochMetrics from_c(const nsc_epoch_metrics& c) {
  epoch::EpochMetrics m;
  m.epoch_index = static_cast<std::size_t>(c.epoch);
  m.cn0_sum = c.cn0_sum;
  if (c.has_mean) m.cn0_mean = c.cn0_mean;
  m.pdop = c.pdop;
  m.hdop = c.hdop;
  m.satellite_count = c.sat_count;
  m.has_measurement = c.has_measurement != 0;
  return m;
}

bool valid_scenario(int s) { return s >= 0 && s < classify::kScenarioCount; }

table_io::Format table_format(nsc_format f) {
  if (f == NSC_FORMAT_CSV) return table_io::Format::Csv;
  if (f == NSC_FORMAT_JSONL) return table_io::Format::JsonLines;
  throw Error(ErrorCode::InvalidArgument, "tables are CSV or JSONL");
}

void pipeline_line(nsc_pipeline* p, std::string_view line) {
  p->stream.push_line(line);
  for (auto& d : p->stream.take_diagnostics()) p->diagnostics.push_back(std::move(d));
}

}  // namespace

extern "C" {

const char* nsc_status_name(nsc_status status) {
  if (status == NSC_END_OF_STREAM) return "EndOfStream";
  static thread_local std::string name;
  name = std::string(error_code_name(static_cast<ErrorCode>(status)));
  return name.c_str();
}

const char* nsc_last_error(void) { return g_last_error.c_str(); }

const char* nsc_version(void) { return "0.1.0"; }

const char* nsc_string_data(const nsc_string* s) { return s ? s->text.c_str() : ""; }
size_t nsc_string_size(const nsc_string* s) { return s ? s->text.size() : 0; }
void nsc_string_free(nsc_string* s) { delete s; }

nsc_parse_policy nsc_default_policy(void) { return nsc_parse_policy{1, 0}; }

nsc_status nsc_checksum(const char* payload, size_t len, char out[3]) {
  if (!out || (!payload && len)) return invalid("null argument");
  return guard([&] {
    auto hex = nmea::compute_checksum(std::string_view(payload ? payload : "", len));
    out[0] = hex[0];
    out[1] = hex[1];
    out[2] = '\0';
    return NSC_OK;
  });
}

nsc_status nsc_describe_sentence(const char* line, size_t len, const nsc_parse_policy* policy,
                                 nsc_string** out) {
  if (!out || (!line && len)) return invalid("null argument");
  return guard([&] {
    auto r = nmea::parse_sentence(std::string_view(line ? line : "", len), to_policy(policy));
    if (auto* err = std::get_if<nmea::ParseError>(&r)) {
      g_last_error = err->message;
      return to_status(err->code);
    }
    return emit(nmea::describe(std::get<nmea::Sentence>(r)), out);
  });
}

nsc_status nsc_pipeline_create(const nsc_parse_policy* policy, nsc_pipeline** out) {
  if (!out) return invalid("null argument");
  return guard([&] {
    *out = new nsc_pipeline{epoch::EpochStream(to_policy(policy)), {}, {}, 0};
    return NSC_OK;
  });
}

void nsc_pipeline_free(nsc_pipeline* p) { delete p; }

nsc_status nsc_pipeline_feed(nsc_pipeline* p, const char* text, size_t len) {
  if (!p || (!text && len)) return invalid("null argument");
  return guard([&] {
    std::string_view in(text ? text : "", len);
    while (!in.empty()) {
      auto nl = in.find('\n');
      if (nl == std::string_view::npos) {
        p->partial.append(in);
        break;
      }
      if (p->partial.empty()) {
        pipeline_line(p, in.substr(0, nl));
      } else {
        p->partial.append(in.substr(0, nl));
        pipeline_line(p, p->partial);
        p->partial.clear();
      }
      in.remove_prefix(nl + 1);
    }
    return NSC_OK;
  });
}

nsc_status nsc_pipeline_finish(nsc_pipeline* p) {
  if (!p) return invalid("null argument");
  return guard([&] {
    if (!p->partial.empty()) {
      pipeline_line(p, p->partial);
      p->partial.clear();
    }
    p->stream.finish();
    for (auto& d : p->stream.take_diagnostics()) p->diagnostics.push_back(std::move(d));
    return NSC_OK;
  });
}

nsc_status nsc_pipeline_next(nsc_pipeline* p, nsc_epoch_metrics* out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] {
    auto m = p->stream.next();
    if (!m) return NSC_END_OF_STREAM;
    *out = to_c(*m);
    return NSC_OK;
  });
}

nsc_status nsc_pipeline_next_diagnostic(nsc_pipeline* p, nsc_string** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] {
    if (p->next_diagnostic >= p->diagnostics.size()) {
      p->diagnostics.clear();
      p->next_diagnostic = 0;
      return NSC_END_OF_STREAM;
    }
    return emit(format_diagnostic(p->diagnostics[p->next_diagnostic++]), out);
  });
}

nsc_status nsc_metrics_format(const nsc_epoch_metrics* m, nsc_format format, nsc_string** out) {
  if (!m || !out) return invalid("null argument");
  return guard([&] { return emit(table_io::format_metrics(from_c(*m), table_format(format)), out); });
}

const char* nsc_metrics_csv_header(void) { return table_io::kMetricsHeader.data(); }

nsc_status nsc_metrics_table_parse(const char* text, size_t len, nsc_metrics_table** out) {
  if (!out || (!text && len)) return invalid("null argument");
  return guard([&] {
    auto rows = table_io::parse_metrics(std::string_view(text ? text : "", len));
    auto* t = new nsc_metrics_table;
    t->rows.reserve(rows.size());
    for (const auto& m : rows) t->rows.push_back(to_c(m));
    *out = t;
    return NSC_OK;
  });
}

void nsc_metrics_table_free(nsc_metrics_table* t) { delete t; }
size_t nsc_metrics_table_size(const nsc_metrics_table* t) { return t ? t->rows.size() : 0; }
const nsc_epoch_metrics* nsc_metrics_table_data(const nsc_metrics_table* t) {
  return t && !t->rows.empty() ? t->rows.data() : nullptr;
}

nsc_status nsc_summarize(const nsc_epoch_metrics* rows, size_t n, nsc_format format,
                         nsc_string** out) {
  if (!out || (!rows && n)) return invalid("null argument");
  if (format != NSC_FORMAT_TEXT && format != NSC_FORMAT_JSON) return invalid("format must be text or json");
  return guard([&] {
    std::vector<epoch::EpochMetrics> metrics;
    metrics.reserve(n);
    for (size_t i = 0; i < n; ++i) metrics.push_back(from_c(rows[i]));
    auto s = summary::summarize(metrics);
    return emit(format == NSC_FORMAT_JSON ? summary::summary_json(s) : summary::summary_text(s), out);
  });
}

const char* nsc_scenario_name(nsc_scenario s) {
  if (!valid_scenario(s)) return "";
  return classify::scenario_name(static_cast<classify::Scenario>(s)).data();
}

nsc_status nsc_scenario_from_name(const char* name, nsc_scenario* out) {
  if (!name || !out) return invalid("null argument");
  auto s = classify::scenario_from_name(name);
  if (!s) {
    g_last_error = std::string("unknown scenario '") + name + "'";
    return NSC_ERR_UNKNOWN_LABEL;
  }
  *out = static_cast<nsc_scenario>(*s);
  return NSC_OK;
}

nsc_status nsc_rules_create(nsc_mode mode, nsc_rules** out) {
  if (!out) return invalid("null argument");
  if (mode != NSC_MODE_SUM && mode != NSC_MODE_COMBINED) return invalid("unknown mode");
  return guard([&] {
    *out = new nsc_rules{classify::RuleSet::defaults(
        mode == NSC_MODE_SUM ? classify::Mode::SumOnly : classify::Mode::Combined)};
    return NSC_OK;
  });
}

void nsc_rules_free(nsc_rules* r) { delete r; }

nsc_status nsc_rules_load(nsc_rules* r, const char* text, size_t len) {
  if (!r || (!text && len)) return invalid("null argument");
  return guard([&] {
    classify::RuleSet copy = r->rules;
    copy.load(std::string_view(text ? text : "", len));
    r->rules = copy;
    return NSC_OK;
  });
}

nsc_status nsc_rules_set_mode(nsc_rules* r, nsc_mode mode) {
  if (!r) return invalid("null argument");
  if (mode != NSC_MODE_SUM && mode != NSC_MODE_COMBINED) return invalid("unknown mode");
  r->rules.mode = mode == NSC_MODE_SUM ? classify::Mode::SumOnly : classify::Mode::Combined;
  return NSC_OK;
}

nsc_mode nsc_rules_mode(const nsc_rules* r) {
  return r && r->rules.mode == classify::Mode::Combined ? NSC_MODE_COMBINED : NSC_MODE_SUM;
}

nsc_status nsc_classify(const nsc_rules* r, const nsc_epoch_metrics* m, nsc_scenario* out) {
  if (!r || !m || !out) return invalid("null argument");
  return guard([&] {
    *out = static_cast<nsc_scenario>(classify::classify(from_c(*m), r->rules));
    return NSC_OK;
  });
}

nsc_status nsc_classify_stream(const nsc_rules* r, const nsc_epoch_metrics* rows, size_t n,
                               int window, nsc_scenario* out) {
  if (!r || ((!rows || !out) && n)) return invalid("null argument");
  return guard([&] {
    std::vector<epoch::EpochMetrics> metrics;
    metrics.reserve(n);
    for (size_t i = 0; i < n; ++i) metrics.push_back(from_c(rows[i]));
    auto labels = classify::classify_stream(metrics, r->rules, window);
    for (size_t i = 0; i < n; ++i) out[i] = static_cast<nsc_scenario>(labels[i].scenario);
    return NSC_OK;
  });
}

nsc_status nsc_prediction_format(const nsc_prediction* p, nsc_format format, nsc_string** out) {
  if (!p || !out) return invalid("null argument");
  if (!valid_scenario(p->scenario)) return invalid("unknown scenario");
  return guard([&] {
    classify::EpochLabel l{static_cast<std::size_t>(p->epoch),
                           static_cast<classify::Scenario>(p->scenario)};
    return emit(table_io::format_label(l, table_format(format)), out);
  });
}

nsc_status nsc_prediction_table_parse(const char* text, size_t len, nsc_prediction_table** out) {
  if (!out || (!text && len)) return invalid("null argument");
  return guard([&] {
    auto rows = table_io::parse_labels(std::string_view(text ? text : "", len));
    auto* t = new nsc_prediction_table;
    t->rows.reserve(rows.size());
    for (const auto& l : rows) {
      t->rows.push_back({l.epoch_index, static_cast<nsc_scenario>(l.scenario)});
    }
    *out = t;
    return NSC_OK;
  });
}

void nsc_prediction_table_free(nsc_prediction_table* t) { delete t; }
size_t nsc_prediction_table_size(const nsc_prediction_table* t) { return t ? t->rows.size() : 0; }
const nsc_prediction* nsc_prediction_table_data(const nsc_prediction_table* t) {
  return t && !t->rows.empty() ? t->rows.data() : nullptr;
}

nsc_status nsc_labels_parse(const char* text, size_t len, nsc_labels** out) {
  if (!out || (!text && len)) return invalid("null argument");
  return guard([&] {
    *out = new nsc_labels{validation::load_labels(std::string_view(text ? text : "", len))};
    return NSC_OK;
  });
}

void nsc_labels_free(nsc_labels* l) { delete l; }
size_t nsc_labels_size(const nsc_labels* l) { return l ? l->intervals.size() : 0; }

nsc_status nsc_evaluate(const nsc_prediction* predicted, size_t n, const nsc_labels* truth,
                        nsc_report** out) {
  if (!truth || !out || (!predicted && n)) return invalid("null argument");
  for (size_t i = 0; i < n; ++i) {
    if (!valid_scenario(predicted[i].scenario)) return invalid("unknown scenario");
  }
  return guard([&] {
    std::vector<classify::EpochLabel> labels;
    labels.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      labels.push_back({static_cast<std::size_t>(predicted[i].epoch),
                        static_cast<classify::Scenario>(predicted[i].scenario)});
    }
    *out = new nsc_report{validation::evaluate(labels, truth->intervals)};
    return NSC_OK;
  });
}

void nsc_report_free(nsc_report* r) { delete r; }

nsc_status nsc_report_summary_get(const nsc_report* r, nsc_report_summary* out) {
  if (!r || !out) return invalid("null argument");
  const auto& rep = r->report;
  out->total_epochs = rep.total_epochs;
  out->matches = rep.matches;
  out->mismatches = rep.mismatches;
  out->indeterminate = rep.indeterminate;
  out->accuracy_pct = rep.accuracy_pct;
  for (int p = 0; p < classify::kScenarioCount; ++p) {
    for (int t = 0; t < validation::kTruthClasses; ++t) {
      out->confusion[p][t] = rep.confusion[static_cast<std::size_t>(p)][static_cast<std::size_t>(t)];
    }
  }
  return NSC_OK;
}

nsc_status nsc_report_format(const nsc_report* r, nsc_format format, nsc_string** out) {
  if (!r || !out) return invalid("null argument");
  if (format != NSC_FORMAT_TEXT && format != NSC_FORMAT_JSON) return invalid("format must be text or json");
  return guard([&] {
    return emit(format == NSC_FORMAT_JSON ? validation::report_json(r->report)
                                          : validation::report_text(r->report),
                out);
  });
}

nsc_status nsc_profile_builtin(const char* name, nsc_profile** out) {
  if (!name || !out) return invalid("null argument");
  return guard([&] {
    auto p = synth::builtin_profile(name);
    if (!p) throw Error(ErrorCode::ConfigError, std::string("no built-in profile '") + name + "'");
    *out = new nsc_profile{*p};
    return NSC_OK;
  });
}

nsc_status nsc_profile_parse(const char* text, size_t len, nsc_profile** out) {
  if (!out || (!text && len)) return invalid("null argument");
  return guard([&] {
    *out = new nsc_profile{synth::ScenarioProfile::from_config(std::string_view(text ? text : "", len))};
    return NSC_OK;
  });
}

nsc_status nsc_profile_resolve(const char* name_or_path, nsc_profile** out) {
  if (!name_or_path || !out) return invalid("null argument");
  return guard([&] {
    *out = new nsc_profile{synth::resolve_profile(name_or_path)};
    return NSC_OK;
  });
}

void nsc_profile_free(nsc_profile* p) { delete p; }

nsc_status nsc_profile_scenario(const nsc_profile* p, nsc_scenario* out) {
  if (!p || !out) return invalid("null argument");
  if (!p->profile.scenario) return invalid("profile has no scenario");
  *out = static_cast<nsc_scenario>(*p->profile.scenario);
  return NSC_OK;
}

nsc_status nsc_profile_format(const nsc_profile* p, nsc_string** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] { return emit(p->profile.to_config(), out); });
}

nsc_status nsc_generate_epoch(const nsc_profile* p, uint64_t seed, uint64_t epoch_index,
                              nsc_string** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] {
    synth::GeneratorConfig cfg;
    cfg.profile = p->profile;
    cfg.seed = seed;
    cfg.epochs = static_cast<std::size_t>(epoch_index) + 1;
    std::string text;
    for (const auto& s : synth::generate_epoch(cfg, static_cast<std::size_t>(epoch_index))) {
      text += s;
      text += "\r\n";
    }
    return emit(std::move(text), out);
  });
}

nsc_status nsc_generate_log(const nsc_profile* p, uint64_t epochs, uint64_t seed, nsc_string** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] {
    synth::GeneratorConfig cfg;
    cfg.profile = p->profile;
    cfg.seed = seed;
    cfg.epochs = static_cast<std::size_t>(epochs);
    return emit(synth::generate_log(cfg), out);
  });
}

nsc_status nsc_cn0_theoretical(const nsc_link_budget* params, double* out) {
  if (!params || !out) return invalid("null argument");
  return guard([&] {
    link_budget::LinkBudgetParams p{params->signal_power_dbw, params->antenna_gain_db,
                                    params->system_noise_temp_k, params->implementation_loss_db};
    *out = link_budget::cn0_theoretical(p);
    return NSC_OK;
  });
}

double nsc_snr_from_powers(double signal_power_db, double noise_power_db) {
  return link_budget::snr_from_powers(signal_power_db, noise_power_db);
}

double nsc_cn0_snr_convert(double value, double bandwidth_dbhz, nsc_conversion direction) {
  return link_budget::cn0_snr_convert(value, bandwidth_dbhz,
                                      direction == NSC_SNR_TO_CN0 ? link_budget::Conversion::SnrToCn0
                                                                  : link_budget::Conversion::Cn0ToSnr);
}

nsc_status nsc_material_attenuation(nsc_material material, double position, double* out) {
  if (!out) return invalid("null argument");
  if (material < 0 || static_cast<std::size_t>(material) >= link_budget::kMaterialCount) {
    return invalid("unknown material");
  }
  return guard([&] {
    *out = link_budget::material_attenuation_db(static_cast<link_budget::Material>(material), position);
    return NSC_OK;
  });
}

nsc_status nsc_material_table_csv(nsc_string** out) {
  if (!out) return invalid("null argument");
  return guard([&] { return emit(link_budget::material_table_csv(), out); });
}

}  // extern "C"
