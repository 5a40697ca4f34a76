// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "epoch.hpp"

#include <map>
#include <string>

namespace nmeascene::epoch {

namespace {

struct GsvGroups {
  // Insertion order of talkers is kept so satellites come out in log order.
  std::vector<std::string> order;
  std::map<std::string, std::vector<nmea::GsvRecord>> current;
};

}  // namespace

EpochRecord fold_epoch(std::span<const nmea::Sentence> sentences,
                       std::size_t epoch_index) {
  EpochRecord rec;
  rec.epoch_index = epoch_index;
  GsvGroups gsv;
  bool seen_gga = false;
  bool seen_gsa = false;

  for (const auto& s : sentences) {
    for (const auto& d : s.diagnostics) rec.diagnostics.push_back(d);

    if (const auto* gga = std::get_if<nmea::GgaRecord>(&s.body)) {
      if (seen_gga) ++rec.duplicate_sentences;
      seen_gga = true;
      rec.fix = gga->fix;
    } else if (const auto* gsa = std::get_if<nmea::GsaRecord>(&s.body)) {
      if (seen_gsa) ++rec.duplicate_sentences;
      seen_gsa = true;
      rec.dop = gsa->dop;
    } else if (const auto* part = std::get_if<nmea::GsvRecord>(&s.body)) {
      const std::string& talker = s.raw.talker;
      auto it = gsv.current.find(talker);
      if (it == gsv.current.end()) {
        gsv.order.push_back(talker);
        gsv.current[talker].push_back(*part);
      } else if (part->message_number == 1) {
        ++rec.duplicate_sentences;
        it->second.assign(1, *part);
      } else {
        it->second.push_back(*part);
      }
    }
  }

  for (const auto& talker : gsv.order) {
    auto assembled = nmea::assemble_gsv(gsv.current[talker]);
    for (auto& sat : assembled.satellites) rec.satellites.push_back(sat);
    for (auto& d : assembled.diagnostics) {
      d.message = talker + "GSV: " + d.message;
      rec.diagnostics.push_back(std::move(d));
    }
  }
  if (rec.duplicate_sentences > 0) {
    rec.diagnostics.push_back(
        {ErrorCode::InvalidArgument,
         "DuplicateSentence: " + std::to_string(rec.duplicate_sentences) +
             " superseded in epoch " + std::to_string(epoch_index),
         0});
  }
  return rec;
}

EpochMetrics compute_metrics(const EpochRecord& record) {
  EpochMetrics m;
  m.epoch_index = record.epoch_index;
  for (const auto& sat : record.satellites) {
    if (sat.cn0_dbhz && *sat.cn0_dbhz > 0.0) {
      m.cn0_sum += *sat.cn0_dbhz;
      ++m.satellite_count;
    }
  }
  if (m.satellite_count > 0) {
    m.cn0_mean = m.cn0_sum / m.satellite_count;
  }
  m.has_measurement = m.satellite_count > 0;
  if (record.dop) {
    m.pdop = record.dop->pdop;
    m.hdop = record.dop->hdop;
  }
  return m;
}

EpochStream::EpochStream(nmea::ParsePolicy policy, std::size_t first_epoch_index)
    : policy_(policy), next_index_(first_epoch_index) {}

void EpochStream::push_line(std::string_view line) {
  ++line_number_;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) return;
  auto result = nmea::parse_sentence(line, policy_, line_number_);
  if (auto* err = std::get_if<nmea::ParseError>(&result)) {
    diagnostics_.push_back({err->code, err->message, err->line_number});
    return;
  }
  push(std::get<nmea::Sentence>(std::move(result)));
}

void EpochStream::push(nmea::Sentence sentence) {
  if (std::holds_alternative<nmea::GgaRecord>(sentence.body)) {
    if (open_) close_epoch();
    open_ = true;
  } else if (!open_) {
    if (!sentence.is_unhandled()) {
      diagnostics_.push_back({ErrorCode::InvalidArgument,
                              "OrphanSentence: " + sentence.raw.talker +
                                  sentence.raw.type_tag + " before first GGA",
                              sentence.raw.line_number});
    }
    for (auto& d : sentence.diagnostics) diagnostics_.push_back(std::move(d));
    return;
  }
  if (sentence.is_unhandled()) {
    for (auto& d : sentence.diagnostics) diagnostics_.push_back(std::move(d));
    return;
  }
  pending_.push_back(std::move(sentence));
}

void EpochStream::finish() {
  if (open_) close_epoch();
  open_ = false;
}

void EpochStream::close_epoch() {
  auto rec = fold_epoch(pending_, next_index_++);
  for (const auto& d : rec.diagnostics) diagnostics_.push_back(d);
  done_.push_back(std::move(rec));
  pending_.clear();
}

std::optional<EpochRecord> EpochStream::next_record() {
  if (done_.empty()) return std::nullopt;
  EpochRecord rec = std::move(done_.front());
  done_.pop_front();
  return rec;
}

std::optional<EpochMetrics> EpochStream::next() {
  auto rec = next_record();
  if (!rec) return std::nullopt;
  return compute_metrics(*rec);
}

std::vector<Diagnostic> EpochStream::take_diagnostics() {
  std::vector<Diagnostic> out;
  out.swap(diagnostics_);
  return out;
}

std::vector<EpochMetrics> stream_epochs(std::string_view text,
                                        const nmea::ParsePolicy& policy,
                                        std::vector<Diagnostic>* diagnostics) {
  EpochStream stream(policy);
  std::vector<EpochMetrics> out;
  auto drain = [&] {
    while (auto m = stream.next()) out.push_back(*m);
  };
  while (!text.empty()) {
    auto nl = text.find('\n');
    stream.push_line(text.substr(0, nl));
    drain();
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  stream.finish();
  drain();
  if (diagnostics) *diagnostics = stream.take_diagnostics();
  return out;
}

}  // namespace nmeascene::epoch
