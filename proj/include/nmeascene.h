/*
 * Copyright 2026 The nmeascene Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libnmeascene: NMEA 0183 ingestion, per-epoch GNSS signal
 * metrics, indoor/outdoor scenario classification, validation scoring and
 * synthetic log generation.
 *
 * Conventions:
 *   - Every fallible call returns nsc_status; NSC_OK is 0. On failure a
 *     thread-local message is available from nsc_last_error().
 *   - Objects are opaque handles created by nsc_*_create / nsc_*_parse and
 *     released with the matching nsc_*_free. Free functions accept NULL.
 *   - Text returned through nsc_string is owned by the caller and released
 *     with nsc_string_free.
 *   - Handles are not synchronized. Distinct handles may be used from
 *     different threads concurrently.
 */
#ifndef NMEASCENE_H
#define NMEASCENE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NSC_BUILDING_LIBRARY)
#    define NSC_API __declspec(dllexport)
#  else
#    define NSC_API __declspec(dllimport)
#  endif
#else
#  define NSC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* ---------------------------------------------------------------- status */

typedef enum nsc_status {
  NSC_OK = 0,
  NSC_ERR_INVALID_ARGUMENT = 1,
  NSC_ERR_CHECKSUM_MISMATCH = 2,
  NSC_ERR_MALFORMED_FRAME = 3,
  NSC_ERR_FIELD_RANGE = 4,
  NSC_ERR_INCOMPLETE_GROUP = 5,
  NSC_ERR_INCONSISTENT_TOTALS = 6,
  NSC_ERR_DOMAIN = 7,
  NSC_ERR_RANGE = 8,
  NSC_ERR_OVERLAP = 9,
  NSC_ERR_UNKNOWN_LABEL = 10,
  NSC_ERR_EMPTY_FILE = 11,
  NSC_ERR_UNCOVERED_EPOCH = 12,
  NSC_ERR_CONFIG = 13,
  NSC_ERR_IO = 14,
  NSC_ERR_FORMAT = 15,
  NSC_ERR_INTERNAL = 16,
  NSC_END_OF_STREAM = 100 /* no item ready; not an error */
} nsc_status;

NSC_API const char* nsc_status_name(nsc_status status);
NSC_API const char* nsc_last_error(void);
NSC_API const char* nsc_version(void);

/* ---------------------------------------------------------------- strings */

typedef struct nsc_string nsc_string;

NSC_API const char* nsc_string_data(const nsc_string* s); /* NUL-terminated */
NSC_API size_t nsc_string_size(const nsc_string* s);
NSC_API void nsc_string_free(nsc_string* s);

/* ---------------------------------------------------------------- NMEA */

typedef struct nsc_parse_policy {
  int strict_checksum;            /* nonzero: checksum required */
  int accept_multi_constellation; /* nonzero: GN/GL/GA/GB/BD/GQ talkers too */
} nsc_parse_policy;

/* strict checksum, GPS talkers only */
NSC_API nsc_parse_policy nsc_default_policy(void);

/* Writes two uppercase hex digits and a NUL to out[0..2]. */
NSC_API nsc_status nsc_checksum(const char* payload, size_t len, char out[3]);

/* Parses one sentence and renders it as a one-line description, including
 * any field diagnostics. Framing and checksum failures return the
 * corresponding status. */
NSC_API nsc_status nsc_describe_sentence(const char* line, size_t len,
                                         const nsc_parse_policy* policy,
                                         nsc_string** out);

/* ---------------------------------------------------------------- metrics */

typedef struct nsc_epoch_metrics {
  uint64_t epoch;
  double cn0_sum;  /* dB-Hz */
  double cn0_mean; /* dB-Hz; meaningful only when has_mean */
  int has_mean;
  double pdop; /* 99.99 when the epoch has no DOP */
  double hdop;
  int32_t sat_count; /* satellites with C/N0 > 0 */
  int has_measurement;
} nsc_epoch_metrics;

typedef enum nsc_format {
  NSC_FORMAT_CSV = 0,
  NSC_FORMAT_JSONL = 1,
  NSC_FORMAT_TEXT = 2,
  NSC_FORMAT_JSON = 3
} nsc_format;

/* Streaming sentence -> epoch folder. A GGA opens each epoch. */
typedef struct nsc_pipeline nsc_pipeline;

NSC_API nsc_status nsc_pipeline_create(const nsc_parse_policy* policy,
                                       nsc_pipeline** out);
NSC_API void nsc_pipeline_free(nsc_pipeline* p);
/* Feeds arbitrary text; partial trailing lines are buffered. */
NSC_API nsc_status nsc_pipeline_feed(nsc_pipeline* p, const char* text, size_t len);
/* Flushes the buffered line and closes the open epoch. */
NSC_API nsc_status nsc_pipeline_finish(nsc_pipeline* p);
/* NSC_OK with *out filled, or NSC_END_OF_STREAM when nothing is ready. */
NSC_API nsc_status nsc_pipeline_next(nsc_pipeline* p, nsc_epoch_metrics* out);
/* One diagnostic line per call, or NSC_END_OF_STREAM. */
NSC_API nsc_status nsc_pipeline_next_diagnostic(nsc_pipeline* p, nsc_string** out);

/* Renders one metrics row (CSV or JSONL), no line terminator. */
NSC_API nsc_status nsc_metrics_format(const nsc_epoch_metrics* m, nsc_format format,
                                      nsc_string** out);
NSC_API const char* nsc_metrics_csv_header(void);

/* Parsed metrics table (CSV with optional header, or JSON lines). */
typedef struct nsc_metrics_table nsc_metrics_table;

NSC_API nsc_status nsc_metrics_table_parse(const char* text, size_t len,
                                           nsc_metrics_table** out);
NSC_API void nsc_metrics_table_free(nsc_metrics_table* t);
NSC_API size_t nsc_metrics_table_size(const nsc_metrics_table* t);
NSC_API const nsc_epoch_metrics* nsc_metrics_table_data(const nsc_metrics_table* t);

/* Table-style per-site statistics over the epochs with measurements. */
NSC_API nsc_status nsc_summarize(const nsc_epoch_metrics* rows, size_t n,
                                 nsc_format format, nsc_string** out);

/* ---------------------------------------------------------------- classify */

typedef enum nsc_scenario {
  NSC_OPEN_OUTDOOR = 0,
  NSC_OBSTRUCTED_OUTDOOR = 1,
  NSC_INDOOR_NEAR_OPENING = 2,
  NSC_INDOOR = 3,
  NSC_INDETERMINATE = 4
} nsc_scenario;

typedef enum nsc_mode { NSC_MODE_SUM = 0, NSC_MODE_COMBINED = 1 } nsc_mode;

NSC_API const char* nsc_scenario_name(nsc_scenario s);
NSC_API nsc_status nsc_scenario_from_name(const char* name, nsc_scenario* out);

typedef struct nsc_rules nsc_rules;

NSC_API nsc_status nsc_rules_create(nsc_mode mode, nsc_rules** out);
NSC_API void nsc_rules_free(nsc_rules* r);
/* Applies a flat key=value config (e.g. "sum_open=350") and validates. */
NSC_API nsc_status nsc_rules_load(nsc_rules* r, const char* text, size_t len);
NSC_API nsc_status nsc_rules_set_mode(nsc_rules* r, nsc_mode mode);
NSC_API nsc_mode nsc_rules_mode(const nsc_rules* r);

NSC_API nsc_status nsc_classify(const nsc_rules* r, const nsc_epoch_metrics* m,
                                nsc_scenario* out);
/* out must hold n entries. window: odd, >= 1 (1 = no smoothing). */
NSC_API nsc_status nsc_classify_stream(const nsc_rules* r, const nsc_epoch_metrics* rows,
                                       size_t n, int window, nsc_scenario* out);

typedef struct nsc_prediction {
  uint64_t epoch;
  nsc_scenario scenario;
} nsc_prediction;

NSC_API nsc_status nsc_prediction_format(const nsc_prediction* p, nsc_format format,
                                         nsc_string** out);

/* Parsed `epoch,scenario` table (CSV or JSON lines). */
typedef struct nsc_prediction_table nsc_prediction_table;

NSC_API nsc_status nsc_prediction_table_parse(const char* text, size_t len,
                                              nsc_prediction_table** out);
NSC_API void nsc_prediction_table_free(nsc_prediction_table* t);
NSC_API size_t nsc_prediction_table_size(const nsc_prediction_table* t);
NSC_API const nsc_prediction* nsc_prediction_table_data(const nsc_prediction_table* t);

/* ---------------------------------------------------------------- validate */

typedef struct nsc_labels nsc_labels;

/* `start_epoch,end_epoch,label` CSV; end exclusive. */
NSC_API nsc_status nsc_labels_parse(const char* text, size_t len, nsc_labels** out);
NSC_API void nsc_labels_free(nsc_labels* l);
NSC_API size_t nsc_labels_size(const nsc_labels* l);

typedef struct nsc_report_summary {
  uint64_t total_epochs;
  uint64_t matches;
  uint64_t mismatches;
  uint64_t indeterminate;
  double accuracy_pct;
  uint64_t confusion[5][4]; /* [predicted][truth] */
} nsc_report_summary;

typedef struct nsc_report nsc_report;

NSC_API nsc_status nsc_evaluate(const nsc_prediction* predicted, size_t n,
                                const nsc_labels* truth, nsc_report** out);
NSC_API void nsc_report_free(nsc_report* r);
NSC_API nsc_status nsc_report_summary_get(const nsc_report* r, nsc_report_summary* out);
/* NSC_FORMAT_TEXT or NSC_FORMAT_JSON */
NSC_API nsc_status nsc_report_format(const nsc_report* r, nsc_format format,
                                     nsc_string** out);

/* ---------------------------------------------------------------- synth */

typedef struct nsc_profile nsc_profile;

/* Built-in profiles: local_a1 ... local_d10. */
NSC_API nsc_status nsc_profile_builtin(const char* name, nsc_profile** out);
NSC_API nsc_status nsc_profile_parse(const char* text, size_t len, nsc_profile** out);
/* A built-in name, else a profile file path. */
NSC_API nsc_status nsc_profile_resolve(const char* name_or_path, nsc_profile** out);
NSC_API void nsc_profile_free(nsc_profile* p);
/* NSC_ERR_INVALID_ARGUMENT when the profile carries no scenario. */
NSC_API nsc_status nsc_profile_scenario(const nsc_profile* p, nsc_scenario* out);
NSC_API nsc_status nsc_profile_format(const nsc_profile* p, nsc_string** out);

/* Sentences of one epoch, CRLF-terminated. */
NSC_API nsc_status nsc_generate_epoch(const nsc_profile* p, uint64_t seed,
                                      uint64_t epoch_index, nsc_string** out);
NSC_API nsc_status nsc_generate_log(const nsc_profile* p, uint64_t epochs, uint64_t seed,
                                    nsc_string** out);

/* ---------------------------------------------------------------- link budget */

typedef struct nsc_link_budget {
  double signal_power_dbw;
  double antenna_gain_db;
  double system_noise_temp_k; /* > 0 */
  double implementation_loss_db;
} nsc_link_budget;

typedef enum nsc_conversion { NSC_SNR_TO_CN0 = 0, NSC_CN0_TO_SNR = 1 } nsc_conversion;

typedef enum nsc_material {
  NSC_DRYWALL = 0,
  NSC_PLYWOOD = 1,
  NSC_GLASS = 2,
  NSC_WOOD = 3,
  NSC_REBAR_GRID = 4,
  NSC_BRICK = 5,
  NSC_CONCRETE = 6,
  NSC_REINFORCED_CONCRETE = 7
} nsc_material;

NSC_API nsc_status nsc_cn0_theoretical(const nsc_link_budget* params, double* out);
NSC_API double nsc_snr_from_powers(double signal_power_db, double noise_power_db);
NSC_API double nsc_cn0_snr_convert(double value, double bandwidth_dbhz,
                                   nsc_conversion direction);
NSC_API nsc_status nsc_material_attenuation(nsc_material material, double position,
                                            double* out);
NSC_API nsc_status nsc_material_table_csv(nsc_string** out);

#ifdef __cplusplus
}
#endif

#endif /* NMEASCENE_H */
