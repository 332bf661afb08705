// Copyright 2026 The fairdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRDIST_FAIRDIST_H_
#define FAIRDIST_FAIRDIST_H_

#include <stddef.h>
#include <stdint.h>

#if defined(FAIRDIST_BUILDING_LIBRARY)
#define FD_API __attribute__((visibility("default")))
#else
#define FD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the CLI exit codes. */
typedef enum fd_status {
  FD_OK = 0,
  FD_ERR_INTERNAL = 1,
  FD_ERR_USAGE = 2,
  FD_ERR_INEXACT_RATIO = 3,
  FD_ERR_OVERFLOW = 4,
  FD_ERR_IO = 5,
} fd_status;

typedef enum fd_measure {
  FD_ACCURACY_EQUALITY = 0,
  FD_STATISTICAL_PARITY = 1,
  FD_EQUAL_OPPORTUNITY = 2,
  FD_PREDICTIVE_EQUALITY = 3,
  FD_POSITIVE_PREDICTIVE_PARITY = 4,
  FD_NEGATIVE_PREDICTIVE_PARITY = 5,
} fd_measure;

typedef enum fd_performance { FD_PERF_ACCURACY = 0, FD_PERF_GMEAN = 1 } fd_performance;
typedef enum fd_format { FD_FORMAT_JSON = 0, FD_FORMAT_CSV = 1, FD_FORMAT_TABLE = 2 } fd_format;
typedef enum fd_denominator { FD_DENOM_ALL = 0, FD_DENOM_DEFINED = 1 } fd_denominator;
typedef enum fd_axis { FD_AXIS_IR = 0, FD_AXIS_GR = 1 } fd_axis;
typedef enum fd_statistic {
  FD_STAT_PERFECT_FAIRNESS = 0,
  FD_STAT_UNDEFINED = 1,
  FD_STAT_UNIQUE_VALUES = 2,
} fd_statistic;
typedef enum fd_plot_kind {
  FD_PLOT_HISTOGRAM = 0,
  FD_PLOT_CURVE = 1,
  FD_PLOT_HEATMAP = 2,
} fd_plot_kind;
typedef enum fd_verdict {
  FD_HOLDS = 0,
  FD_FAILS = 1,
  FD_HOLDS_WITH_CAVEAT = 2,
  FD_REPORTED = 3,
} fd_verdict;

/* Opaque handles. Every handle is released with its own *_free function;
 * passing NULL to a *_free function is a no-op. */
typedef struct fd_context fd_context;
typedef struct fd_pmf fd_pmf;
typedef struct fd_heatmap fd_heatmap;
typedef struct fd_report fd_report;
typedef struct fd_text fd_text;

/* A context owns the worker pool and the last error message. threads == 0
 * uses every hardware thread. A context must not be shared between threads. */
FD_API fd_status fd_context_new(unsigned threads, fd_context** out);
FD_API void fd_context_free(fd_context* ctx);
/* Message of the last failed call on ctx; empty after a success. */
FD_API const char* fd_last_error(const fd_context* ctx);

FD_API const char* fd_measure_name(fd_measure m);
FD_API fd_status fd_measure_parse(fd_context* ctx, const char* name, fd_measure* out);
FD_API fd_status fd_performance_parse(fd_context* ctx, const char* name, fd_performance* out);

/* Text results. */
FD_API const char* fd_text_data(const fd_text* t);
FD_API size_t fd_text_size(const fd_text* t);
FD_API void fd_text_free(fd_text* t);

/* Counting. Counts may exceed 64 bits, so they are returned as decimal text. */
FD_API fd_status fd_total_count(fd_context* ctx, int64_t n, fd_text** out);
FD_API fd_status fd_stratum_count(fd_context* ctx, int64_t n, int64_t p, int64_t n_p, fd_text** out);
/* Converts ratios ("1/28", "0.5") to counts; FD_ERR_INEXACT_RATIO names the
 * offending ratio. */
FD_API fd_status fd_stratum_from_ratios(fd_context* ctx, int64_t n, const char* ir,
                                        const char* gr, int64_t* p, int64_t* n_p);

/* Pmfs. */
FD_API fd_status fd_pmf_compute(fd_context* ctx, fd_measure m, int64_t n, int64_t p,
                                int64_t n_p, int brute_force, fd_pmf** out);
FD_API void fd_pmf_free(fd_pmf* pmf);
FD_API int fd_pmf_equal(const fd_pmf* a, const fd_pmf* b);
FD_API size_t fd_pmf_unique_values(const fd_pmf* pmf);
/* Value and count of the i-th entry in ascending value order. Counts that do
 * not fit 64 bits fail with FD_ERR_OVERFLOW. */
FD_API fd_status fd_pmf_entry(fd_context* ctx, const fd_pmf* pmf, size_t i, int64_t* num,
                              int64_t* den, uint64_t* count);
FD_API fd_status fd_pmf_total(fd_context* ctx, const fd_pmf* pmf, uint64_t* out);
FD_API fd_status fd_pmf_undefined(fd_context* ctx, const fd_pmf* pmf, uint64_t* out);
FD_API fd_status fd_pmf_perfect_fairness(fd_context* ctx, const fd_pmf* pmf, fd_denominator d,
                                         int64_t* num, int64_t* den);
FD_API fd_status fd_pmf_undefined_probability(fd_context* ctx, const fd_pmf* pmf, int64_t* num,
                                              int64_t* den);
FD_API fd_status fd_pmf_export(fd_context* ctx, const fd_pmf* pmf, fd_format f, fd_text** out);
FD_API fd_status fd_pmf_histogram_export(fd_context* ctx, const fd_pmf* pmf, int bins,
                                         fd_format f, fd_text** out);
/* Reads a pmf exported as JSON or CSV. */
FD_API fd_status fd_pmf_parse(fd_context* ctx, const char* text, size_t size, fd_pmf** out);
/* Bin counts of the pmf; counts has room for bins entries. */
FD_API fd_status fd_pmf_histogram(fd_context* ctx, const fd_pmf* pmf, int bins,
                                  uint64_t* counts, uint64_t* undefined);

/* Sweeps. grid is a comma-separated ratio list. */
FD_API fd_status fd_sweep(fd_context* ctx, fd_measure m, int64_t n, fd_axis axis,
                          const char* grid, const char* fixed, fd_statistic s,
                          fd_denominator d, fd_format f, fd_text** out);

/* Heatmaps. With ir and gr both NULL the heatmap pools every pair of size n;
 * with both set it is restricted to that stratum. */
FD_API fd_status fd_heatmap_compute(fd_context* ctx, fd_measure m, fd_performance perf,
                                    int64_t n, const char* ir, const char* gr,
                                    int fairness_bins, int performance_bins,
                                    fd_heatmap** out);
FD_API void fd_heatmap_free(fd_heatmap* h);
FD_API fd_status fd_heatmap_export(fd_context* ctx, const fd_heatmap* h, fd_format f,
                                   fd_text** out);

/* Property reports. NULL thresholds keep the defaults. */
typedef struct fd_thresholds {
  const char* immunity_tv;
  const char* resolution_ratio;
  const char* perfect_fairness_ratio;
  const char* undefined_trend_ratio;
} fd_thresholds;

FD_API fd_status fd_report_compute(fd_context* ctx, int64_t n, const char* ir_grid,
                                   const char* gr_grid, const fd_thresholds* thresholds,
                                   fd_report** out);
FD_API void fd_report_free(fd_report* r);
FD_API fd_status fd_report_export(fd_context* ctx, const fd_report* r, fd_format f,
                                  fd_text** out);
/* property indexes rows in display order (0..7). */
FD_API fd_status fd_report_verdict(fd_context* ctx, const fd_report* r, int property,
                                   fd_measure m, fd_verdict* out);

/* Scores JSON-lines records (see the README); output is JSON lines. */
FD_API fd_status fd_measure_batch(fd_context* ctx, const char* input, size_t size,
                                  fd_text** out);

FD_API fd_status fd_render_svg(fd_context* ctx, const char* text, size_t size,
                               fd_plot_kind kind, int bins, fd_text** out);

#ifdef __cplusplus
}
#endif

#endif  /* FAIRDIST_FAIRDIST_H_ */
