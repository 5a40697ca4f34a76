// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0
//
// nmeascene: parse, metrics, classify, validate, synth and report over
// NMEA logs. Every stage reads a file or stdin and writes a file or stdout,
// so stages chain as a shell pipeline.

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nmeascene.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;

struct InputError {
  std::string message;
};

struct UsageError {
  std::string message;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using String = std::unique_ptr<nsc_string, Deleter<nsc_string, nsc_string_free>>;
using Pipeline = std::unique_ptr<nsc_pipeline, Deleter<nsc_pipeline, nsc_pipeline_free>>;
using MetricsTable =
    std::unique_ptr<nsc_metrics_table, Deleter<nsc_metrics_table, nsc_metrics_table_free>>;
using PredictionTable = std::unique_ptr<nsc_prediction_table,
                                        Deleter<nsc_prediction_table, nsc_prediction_table_free>>;
using Rules = std::unique_ptr<nsc_rules, Deleter<nsc_rules, nsc_rules_free>>;
using Labels = std::unique_ptr<nsc_labels, Deleter<nsc_labels, nsc_labels_free>>;
using Report = std::unique_ptr<nsc_report, Deleter<nsc_report, nsc_report_free>>;
using Profile = std::unique_ptr<nsc_profile, Deleter<nsc_profile, nsc_profile_free>>;

void check(nsc_status s, const std::string& context) {
  if (s == NSC_OK) return;
  std::string msg = context.empty() ? "" : context + ": ";
  msg += nsc_status_name(s);
  if (*nsc_last_error()) msg += std::string(": ") + nsc_last_error();
  throw InputError{msg};
}

std::string take(nsc_string* raw) {
  String s(raw);
  return std::string(nsc_string_data(s.get()), nsc_string_size(s.get()));
}

bool is_stdio(const std::string& path) { return path.empty() || path == "-"; }

void require_readable(const std::string& path, const char* what) {
  if (is_stdio(path)) return;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw InputError{std::string(what) + " '" + path + "' is not a readable file"};
  }
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw InputError{std::string(what) + " '" + path + "': " + std::strerror(errno)};
}

void require_writable(const std::string& path) {
  if (is_stdio(path)) return;
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_directory(path, ec)) throw InputError{"output '" + path + "' is a directory"};
  fs::path parent = fs::path(path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent, ec)) {
    throw InputError{"output '" + path + "': directory '" + parent.string() + "' does not exist"};
  }
}

std::string read_all(const std::string& path) {
  if (is_stdio(path)) {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open '" + path + "': " + std::strerror(errno)};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_all(const std::string& path, const std::string& text) {
  if (is_stdio(path)) {
    std::cout.write(text.data(), static_cast<std::streamsize>(text.size()));
    std::cout.flush();
    if (!std::cout) throw InputError{"write to stdout failed"};
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError{"cannot write '" + path + "': " + std::strerror(errno)};
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw InputError{"write to '" + path + "' failed"};
}

nsc_format table_format(const std::string& name) {
  if (name == "csv") return NSC_FORMAT_CSV;
  if (name == "jsonl") return NSC_FORMAT_JSONL;
  throw UsageError{"--format must be csv or jsonl for this subcommand"};
}

nsc_format report_format(const std::string& name) {
  if (name == "text") return NSC_FORMAT_TEXT;
  if (name == "json") return NSC_FORMAT_JSON;
  throw UsageError{"--format must be text or json for this subcommand"};
}

struct Options {
  std::string input;
  std::string output;
  std::string labels;
  std::string mode;
  std::string rules;
  std::string profile;
  std::string format;
  int window = 1;
  std::uint64_t epochs = 3600;
  std::uint64_t seed = 0;
  bool lenient = false;
  bool multi_constellation = false;
  bool verbose = false;
};

nsc_parse_policy policy_of(const Options& o) {
  nsc_parse_policy p = nsc_default_policy();
  p.strict_checksum = o.lenient ? 0 : 1;
  p.accept_multi_constellation = o.multi_constellation ? 1 : 0;
  return p;
}

std::vector<nsc_epoch_metrics> load_metrics(const std::string& path) {
  const std::string text = read_all(path);
  nsc_metrics_table* raw = nullptr;
  check(nsc_metrics_table_parse(text.data(), text.size(), &raw),
        is_stdio(path) ? "metrics on stdin" : "'" + path + "'");
  MetricsTable table(raw);
  const nsc_epoch_metrics* rows = nsc_metrics_table_data(table.get());
  return {rows, rows + nsc_metrics_table_size(table.get())};
}

int run_parse(const Options& o) {
  const std::string text = read_all(o.input);
  const nsc_parse_policy policy = policy_of(o);
  std::string out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    nsc_string* raw = nullptr;
    nsc_status s = nsc_describe_sentence(line.data(), line.size(), &policy, &raw);
    out += "line " + std::to_string(line_no) + ": ";
    if (s == NSC_OK) {
      out += take(raw);
    } else {
      out += std::string(nsc_status_name(s)) + ": " + nsc_last_error();
    }
    out += '\n';
  }
  write_all(o.output, out);
  return kExitOk;
}

int run_metrics(const Options& o) {
  const nsc_format fmt = table_format(o.format.empty() ? "csv" : o.format);
  const nsc_parse_policy policy = policy_of(o);
  nsc_pipeline* raw = nullptr;
  check(nsc_pipeline_create(&policy, &raw), "pipeline");
  Pipeline pipe(raw);

  std::string out;
  if (fmt == NSC_FORMAT_CSV) out = std::string(nsc_metrics_csv_header()) + '\n';
  std::size_t diagnostics = 0;
  auto drain = [&] {
    nsc_epoch_metrics m;
    while (nsc_pipeline_next(pipe.get(), &m) == NSC_OK) {
      nsc_string* row = nullptr;
      check(nsc_metrics_format(&m, fmt, &row), "format");
      out += take(row);
      out += '\n';
    }
    nsc_string* d = nullptr;
    while (nsc_pipeline_next_diagnostic(pipe.get(), &d) == NSC_OK) {
      ++diagnostics;
      std::string line = take(d);
      if (o.verbose) std::cerr << line << '\n';
    }
  };

  std::unique_ptr<std::ifstream> file;
  std::istream* in = &std::cin;
  if (!is_stdio(o.input)) {
    file = std::make_unique<std::ifstream>(o.input, std::ios::binary);
    if (!*file) throw InputError{"cannot open '" + o.input + "': " + std::strerror(errno)};
    in = file.get();
  }
  std::vector<char> buf(1 << 16);
  while (*in) {
    in->read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const auto got = static_cast<std::size_t>(in->gcount());
    if (got == 0) break;
    check(nsc_pipeline_feed(pipe.get(), buf.data(), got), "feed");
    drain();
  }
  check(nsc_pipeline_finish(pipe.get()), "finish");
  drain();
  if (diagnostics > 0 && !o.verbose) {
    std::cerr << "nmeascene: " << diagnostics << " diagnostic(s); rerun with --verbose to list them\n";
  }
  write_all(o.output, out);
  return kExitOk;
}

Rules build_rules(const Options& o) {
  nsc_rules* raw = nullptr;
  check(nsc_rules_create(NSC_MODE_SUM, &raw), "rules");
  Rules rules(raw);
  if (!o.rules.empty()) {
    const std::string text = read_all(o.rules);
    check(nsc_rules_load(rules.get(), text.data(), text.size()), "'" + o.rules + "'");
  }
  if (!o.mode.empty()) {
    check(nsc_rules_set_mode(rules.get(), o.mode == "combined" ? NSC_MODE_COMBINED : NSC_MODE_SUM),
          "mode");
  }
  return rules;
}

int run_classify(const Options& o) {
  const nsc_format fmt = table_format(o.format.empty() ? "csv" : o.format);
  if (o.window < 1 || o.window % 2 == 0) throw UsageError{"--window must be odd and >= 1"};
  Rules rules = build_rules(o);
  const auto metrics = load_metrics(o.input);
  std::vector<nsc_scenario> labels(metrics.size());
  check(nsc_classify_stream(rules.get(), metrics.data(), metrics.size(), o.window, labels.data()),
        "classify");

  std::string out = fmt == NSC_FORMAT_CSV ? "epoch,scenario\n" : "";
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    nsc_prediction p{metrics[i].epoch, labels[i]};
    nsc_string* row = nullptr;
    check(nsc_prediction_format(&p, fmt, &row), "format");
    out += take(row);
    out += '\n';
  }
  write_all(o.output, out);
  return kExitOk;
}

int run_validate(const Options& o) {
  const nsc_format fmt = report_format(o.format.empty() ? "text" : o.format);
  if (o.labels.empty()) throw UsageError{"validate needs --labels FILE"};

  const std::string label_text = read_all(o.labels);
  nsc_labels* raw_labels = nullptr;
  check(nsc_labels_parse(label_text.data(), label_text.size(), &raw_labels), "'" + o.labels + "'");
  Labels labels(raw_labels);

  const std::string pred_text = read_all(o.input);
  nsc_prediction_table* raw_pred = nullptr;
  check(nsc_prediction_table_parse(pred_text.data(), pred_text.size(), &raw_pred),
        is_stdio(o.input) ? "predictions on stdin" : "'" + o.input + "'");
  PredictionTable predictions(raw_pred);

  nsc_report* raw_report = nullptr;
  check(nsc_evaluate(nsc_prediction_table_data(predictions.get()),
                     nsc_prediction_table_size(predictions.get()), labels.get(), &raw_report),
        "validate");
  Report report(raw_report);
  nsc_string* text = nullptr;
  check(nsc_report_format(report.get(), fmt, &text), "report");
  write_all(o.output, take(text));
  return kExitOk;
}

int run_synth(const Options& o) {
  if (o.profile.empty()) throw UsageError{"synth needs --profile NAME|FILE"};
  if (o.epochs < 1) throw UsageError{"--epochs must be >= 1"};
  nsc_profile* raw = nullptr;
  check(nsc_profile_resolve(o.profile.c_str(), &raw), "profile '" + o.profile + "'");
  Profile profile(raw);
  nsc_string* log = nullptr;
  check(nsc_generate_log(profile.get(), o.epochs, o.seed, &log), "synth");
  write_all(o.output, take(log));
  return kExitOk;
}

int run_report(const Options& o) {
  const nsc_format fmt = report_format(o.format.empty() ? "text" : o.format);
  const auto metrics = load_metrics(o.input);
  nsc_string* text = nullptr;
  check(nsc_summarize(metrics.data(), metrics.size(), fmt, &text), "report");
  write_all(o.output, take(text));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  Options o;
  CLI::App app{"Scenario classification for NMEA 0183 GPS logs", "nmeascene"};
  app.set_version_flag("--version", std::string(nsc_version()));
  app.require_subcommand(1, 1);

  auto io = [&o](CLI::App* sub) {
    sub->add_option("-i,--input", o.input, "Input file (default: stdin)");
    sub->add_option("-o,--output", o.output, "Output file (default: stdout)");
  };
  auto parsing = [&o](CLI::App* sub) {
    auto* strict = sub->add_flag("--strict", "Require a valid checksum on every sentence (default)");
    sub->add_flag("--lenient", o.lenient, "Accept sentences without a checksum")->excludes(strict);
    sub->add_flag("--multi-constellation", o.multi_constellation,
                  "Accept GN/GL/GA/GB/BD/GQ talkers");
  };

  auto* parse = app.add_subcommand("parse", "Describe each sentence of an NMEA log");
  io(parse);
  parsing(parse);

  auto* metrics = app.add_subcommand("metrics", "Per-epoch C/N0 and DOP metrics from an NMEA log");
  io(metrics);
  parsing(metrics);
  metrics->add_option("--format", o.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  metrics->add_flag("-v,--verbose", o.verbose, "Print diagnostics to stderr");

  auto* classify = app.add_subcommand("classify", "Label each epoch of a metrics table");
  io(classify);
  classify->add_option("--mode", o.mode, "sum or combined (default: sum, or the rules file)")
      ->check(CLI::IsMember({"sum", "combined"}));
  classify->add_option("--window", o.window, "Odd smoothing window, 1 disables smoothing");
  classify->add_option("--rules", o.rules, "Threshold overrides, key=value lines")
      ->check(CLI::ExistingFile);
  classify->add_option("--format", o.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));

  auto* validate = app.add_subcommand("validate", "Score predictions against labelled intervals");
  io(validate);
  validate->add_option("--labels", o.labels, "start_epoch,end_epoch,label CSV")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* synth = app.add_subcommand("synth", "Generate a deterministic NMEA log from a profile");
  synth->add_option("-o,--output", o.output, "Output file (default: stdout)");
  synth->add_option("--profile", o.profile, "Built-in name (local_a1 ... local_d10) or file")
      ->required();
  synth->add_option("--epochs", o.epochs, "Number of epochs")->check(CLI::PositiveNumber);
  synth->add_option("--seed", o.seed, "Generator seed");

  auto* report = app.add_subcommand("report", "Mean and standard deviation of a metrics table");
  io(report);
  report->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    require_readable(o.input, "input");
    require_writable(o.output);
    if (*validate) require_readable(o.labels, "labels");
    if (*classify && !o.rules.empty()) require_readable(o.rules, "rules");

    if (*parse) return run_parse(o);
    if (*metrics) return run_metrics(o);
    if (*classify) return run_classify(o);
    if (*validate) return run_validate(o);
    if (*synth) return run_synth(o);
    return run_report(o);
  } catch (const UsageError& e) {
    std::cerr << "nmeascene: " << e.message << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "nmeascene: " << e.message << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "nmeascene: " << e.what() << '\n';
    return kExitInput;
  }
}
