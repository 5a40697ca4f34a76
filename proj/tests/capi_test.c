/* Copyright 2026 The nmeascene Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Exercises the shared library through its C header only. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "nmeascene.h"

static int failures = 0;
static int checks = 0;

#define CHECK(cond)                                                   \
  do {                                                                \
    ++checks;                                                         \
    if (!(cond)) {                                                    \
      ++failures;                                                     \
      fprintf(stderr, "%s:%d: CHECK(%s) failed\n", __FILE__, __LINE__, #cond); \
    }                                                                 \
  } while (0)

static const char* kEpochs =
    "$GPGGA,123519.00,2333.6000,S,04643.8000,W,1,08,0.90,760.0,M,-5.0,M,,*4C\r\n"
    "$GPGSA,A,3,01,02,03,04,05,06,07,08,,,,,1.90,0.90,1.67*0B\r\n"
    "$GPGSV,1,1,03,01,40,083,40,02,17,308,35,03,07,344,30*4D\r\n"
    "$GPGGA,123519.00,,,,,0,00,,,M,,M,,*45\r\n"
    "$GPGSV,1,1,00*79\r\n"
    "garbage\r\n";

static void test_basics(void) {
  char hex[3];
  CHECK(strcmp(nsc_version(), "0.1.0") == 0);
  CHECK(nsc_checksum("GPGSV,1,1,00", 12, hex) == NSC_OK);
  CHECK(strcmp(hex, "79") == 0);
  CHECK(nsc_checksum("GPGSV", 5, NULL) == NSC_ERR_INVALID_ARGUMENT);
  CHECK(strlen(nsc_last_error()) > 0);
  CHECK(strcmp(nsc_status_name(NSC_ERR_CHECKSUM_MISMATCH), "ChecksumMismatch") == 0);
  CHECK(strcmp(nsc_status_name(NSC_END_OF_STREAM), "EndOfStream") == 0);
}

static void test_describe(void) {
  nsc_string* s = NULL;
  nsc_parse_policy policy = nsc_default_policy();
  const char* line = "$GPGSV,1,1,00*79";
  CHECK(nsc_describe_sentence(line, strlen(line), &policy, &s) == NSC_OK);
  CHECK(strncmp(nsc_string_data(s), "GPGSV", 5) == 0);
  CHECK(nsc_string_size(s) == strlen(nsc_string_data(s)));
  nsc_string_free(s);

  line = "$GPGSV,1,1,00*78";
  s = NULL;
  CHECK(nsc_describe_sentence(line, strlen(line), &policy, &s) == NSC_ERR_CHECKSUM_MISMATCH);
  CHECK(s == NULL);
  CHECK(strstr(nsc_last_error(), "computed 79") != NULL);

  line = "$GPGSV,1,1,00";
  CHECK(nsc_describe_sentence(line, strlen(line), &policy, &s) == NSC_ERR_CHECKSUM_MISMATCH);
  policy.strict_checksum = 0;
  CHECK(nsc_describe_sentence(line, strlen(line), &policy, &s) == NSC_OK);
  nsc_string_free(s);
}

static void test_pipeline(void) {
  nsc_pipeline* p = NULL;
  nsc_epoch_metrics m[4];
  size_t n = 0, i, diags = 0;
  nsc_string* d = NULL;
  CHECK(nsc_pipeline_create(NULL, &p) == NSC_OK);
  /* Feed one byte at a time: lines split across calls must reassemble. */
  for (i = 0; kEpochs[i]; ++i) CHECK(nsc_pipeline_feed(p, kEpochs + i, 1) == NSC_OK);
  while (n < 4 && nsc_pipeline_next(p, &m[n]) == NSC_OK) ++n;
  CHECK(n == 1);
  CHECK(nsc_pipeline_finish(p) == NSC_OK);
  while (n < 4 && nsc_pipeline_next(p, &m[n]) == NSC_OK) ++n;
  CHECK(n == 2);
  CHECK(nsc_pipeline_next(p, &m[3]) == NSC_END_OF_STREAM);
  while (nsc_pipeline_next_diagnostic(p, &d) == NSC_OK) {
    ++diags;
    nsc_string_free(d);
  }
  CHECK(diags == 1);
  nsc_pipeline_free(p);

  CHECK(m[0].epoch == 0);
  CHECK(m[0].cn0_sum == 105.0);
  CHECK(m[0].has_mean && m[0].cn0_mean == 35.0);
  CHECK(m[0].sat_count == 3);
  CHECK(fabs(m[0].pdop - 1.9) < 1e-12);
  CHECK(m[1].epoch == 1);
  CHECK(!m[1].has_mean && !m[1].has_measurement);
  CHECK(m[1].pdop == 99.99);
}

static void test_tables_and_classify(void) {
  const char* csv =
      "epoch,cn0_sum,cn0_mean,pdop,hdop,sat_count,has_measurement\n"
      "0,528.60,38.84,1.91,0.87,14,true\n"
      "1,172.95,21.55,2.89,1.42,8,true\n"
      "2,0.00,,99.99,99.99,0,false\n";
  nsc_metrics_table* t = NULL;
  nsc_rules* r = NULL;
  nsc_scenario out[3];
  nsc_string* row = NULL;
  const nsc_epoch_metrics* rows;
  CHECK(nsc_metrics_table_parse(csv, strlen(csv), &t) == NSC_OK);
  CHECK(nsc_metrics_table_size(t) == 3);
  rows = nsc_metrics_table_data(t);

  CHECK(nsc_metrics_format(&rows[2], NSC_FORMAT_CSV, &row) == NSC_OK);
  CHECK(strcmp(nsc_string_data(row), "2,0.00,,99.99,99.99,0,false") == 0);
  nsc_string_free(row);
  CHECK(nsc_metrics_format(&rows[2], NSC_FORMAT_TEXT, &row) == NSC_ERR_INVALID_ARGUMENT);

  CHECK(nsc_rules_create(NSC_MODE_SUM, &r) == NSC_OK);
  CHECK(nsc_classify_stream(r, rows, 3, 1, out) == NSC_OK);
  CHECK(out[0] == NSC_OPEN_OUTDOOR);
  CHECK(out[1] == NSC_INDOOR_NEAR_OPENING);
  CHECK(out[2] == NSC_INDOOR);
  CHECK(nsc_classify_stream(r, rows, 3, 2, out) == NSC_ERR_INVALID_ARGUMENT);

  CHECK(nsc_rules_set_mode(r, NSC_MODE_COMBINED) == NSC_OK);
  CHECK(nsc_rules_mode(r) == NSC_MODE_COMBINED);
  CHECK(nsc_classify(r, &rows[1], &out[1]) == NSC_OK);
  CHECK(out[1] == NSC_INDETERMINATE);

  CHECK(nsc_rules_load(r, "sum_open=10", 11) == NSC_ERR_CONFIG);
  CHECK(nsc_classify(r, &rows[0], &out[0]) == NSC_OK);
  CHECK(out[0] == NSC_OPEN_OUTDOOR); /* failed load leaves the rules intact */
  CHECK(nsc_rules_load(r, "mode=sum\nsum_open=600\n", 22) == NSC_OK);
  CHECK(nsc_classify(r, &rows[0], &out[0]) == NSC_OK);
  CHECK(out[0] == NSC_OBSTRUCTED_OUTDOOR);

  CHECK(strcmp(nsc_scenario_name(NSC_INDOOR_NEAR_OPENING), "indoor_near_opening") == 0);
  CHECK(nsc_scenario_from_name("indoor", &out[0]) == NSC_OK && out[0] == NSC_INDOOR);
  CHECK(nsc_scenario_from_name("attic", &out[0]) == NSC_ERR_UNKNOWN_LABEL);

  nsc_rules_free(r);
  nsc_metrics_table_free(t);
  t = NULL;
  CHECK(nsc_metrics_table_parse("1,2\n", 4, &t) == NSC_ERR_FORMAT);
  CHECK(t == NULL);
}

static void test_validate(void) {
  const char* labels = "start_epoch,end_epoch,label\n0,2,open_outdoor\n2,4,indoor\n";
  const char* preds = "epoch,scenario\n0,open_outdoor\n1,indeterminate\n2,indoor\n3,indoor\n";
  nsc_labels* l = NULL;
  nsc_prediction_table* p = NULL;
  nsc_report* rep = NULL;
  nsc_report_summary sum;
  nsc_string* text = NULL;
  CHECK(nsc_labels_parse(labels, strlen(labels), &l) == NSC_OK);
  CHECK(nsc_labels_size(l) == 2);
  CHECK(nsc_prediction_table_parse(preds, strlen(preds), &p) == NSC_OK);
  CHECK(nsc_prediction_table_size(p) == 4);
  CHECK(nsc_evaluate(nsc_prediction_table_data(p), nsc_prediction_table_size(p), l, &rep) == NSC_OK);
  CHECK(nsc_report_summary_get(rep, &sum) == NSC_OK);
  CHECK(sum.total_epochs == 4);
  CHECK(sum.matches == 3);
  CHECK(sum.indeterminate == 1);
  CHECK(sum.confusion[NSC_INDETERMINATE][NSC_OPEN_OUTDOOR] == 1);
  CHECK(nsc_report_format(rep, NSC_FORMAT_TEXT, &text) == NSC_OK);
  CHECK(strstr(nsc_string_data(text), "75.00%") != NULL);
  nsc_string_free(text);
  nsc_report_free(rep);
  nsc_prediction_table_free(p);

  CHECK(nsc_labels_parse("0,10,indoor\n5,15,indoor\n", 24, &l) == NSC_ERR_OVERLAP);
  nsc_labels_free(l);
}

static void test_synth(void) {
  nsc_profile* prof = NULL;
  nsc_string* a = NULL;
  nsc_string* b = NULL;
  nsc_string* e = NULL;
  nsc_scenario sc;
  CHECK(nsc_profile_builtin("local_b2", &prof) == NSC_OK);
  CHECK(nsc_profile_scenario(prof, &sc) == NSC_OK && sc == NSC_OBSTRUCTED_OUTDOOR);
  CHECK(nsc_generate_log(prof, 5, 7, &a) == NSC_OK);
  CHECK(nsc_generate_log(prof, 5, 7, &b) == NSC_OK);
  CHECK(strcmp(nsc_string_data(a), nsc_string_data(b)) == 0);
  CHECK(nsc_generate_epoch(prof, 7, 0, &e) == NSC_OK);
  CHECK(strncmp(nsc_string_data(a), nsc_string_data(e), nsc_string_size(e)) == 0);
  nsc_string_free(a);
  nsc_string_free(b);
  nsc_string_free(e);
  CHECK(nsc_generate_log(prof, 0, 7, &a) == NSC_ERR_CONFIG);
  nsc_profile_free(prof);
  CHECK(nsc_profile_builtin("local_z9", &prof) == NSC_ERR_CONFIG);
  CHECK(nsc_profile_resolve("/no/such/profile.cfg", &prof) == NSC_ERR_IO);
}

static void test_link_budget(void) {
  nsc_link_budget lb = {-160.0, 3.0, 290.0, 2.0};
  double v = 0;
  CHECK(nsc_cn0_theoretical(&lb, &v) == NSC_OK);
  CHECK(fabs(v - 44.97722915699807) < 1e-9);
  lb.system_noise_temp_k = 0.0;
  CHECK(nsc_cn0_theoretical(&lb, &v) == NSC_ERR_DOMAIN);
  CHECK(nsc_snr_from_powers(-160.0, -170.0) == 10.0);
  CHECK(nsc_cn0_snr_convert(10.0, 30.0, NSC_SNR_TO_CN0) == 40.0);
  CHECK(nsc_cn0_snr_convert(45.0, 33.0, NSC_CN0_TO_SNR) == 12.0);
  CHECK(nsc_material_attenuation(NSC_BRICK, 0.5, &v) == NSC_OK && v == 18.0);
  CHECK(nsc_material_attenuation(NSC_CONCRETE, 1.5, &v) == NSC_ERR_RANGE);
  CHECK(nsc_material_attenuation((nsc_material)42, 0.5, &v) == NSC_ERR_INVALID_ARGUMENT);
}

int main(void) {
  test_basics();
  test_describe();
  test_pipeline();
  test_tables_and_classify();
  test_validate();
  test_synth();
  test_link_budget();
  printf("capi_test: %d checks, %d failures\n", checks, failures);
  return failures == 0 ? 0 : 1;
}
