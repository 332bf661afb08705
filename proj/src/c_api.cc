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

#include "fairdist/fairdist.h"

#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "batch.h"
#include "distribution.h"
#include "enumeration.h"
#include "error.h"
#include "executor.h"
#include "properties.h"
#include "serialize.h"
#include "svg.h"

struct fd_context {
  fairdist::Executor executor;
  std::string last_error;
};

struct fd_pmf {
  fairdist::Pmf pmf;
  std::optional<fairdist::MeasureId> measure;
  std::optional<fairdist::Stratum> stratum;
};

struct fd_heatmap {
  fairdist::Heatmap heatmap;
};

struct fd_report {
  fairdist::PropertyReport report;
};

struct fd_text {
  std::string data;
};

namespace {

using fairdist::ErrorCode;

fd_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return FD_ERR_USAGE;
    case ErrorCode::kInexactRatio:
      return FD_ERR_INEXACT_RATIO;
    case ErrorCode::kOverflow:
      return FD_ERR_OVERFLOW;
    case ErrorCode::kIo:
      return FD_ERR_IO;
    case ErrorCode::kInternal:
      break;
  }
  return FD_ERR_INTERNAL;
}

// Runs fn, translating exceptions into a status and ctx->last_error.
template <typename Fn>
fd_status Guard(fd_context* ctx, Fn&& fn) {
  if (ctx == nullptr) return FD_ERR_USAGE;
  ctx->last_error.clear();
  try {
    fn();
    return FD_OK;
  } catch (const fairdist::Error& e) {
    ctx->last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return FD_ERR_OVERFLOW;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return FD_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) fairdist::Fail(ErrorCode::kInvalidArgument, what);
}

fairdist::MeasureId Measure(fd_measure m) {
  Require(m >= FD_ACCURACY_EQUALITY && m <= FD_NEGATIVE_PREDICTIVE_PARITY,
          "unknown measure");
  return static_cast<fairdist::MeasureId>(m);
}

fairdist::Denominator Denom(fd_denominator d) {
  Require(d == FD_DENOM_ALL || d == FD_DENOM_DEFINED, "unknown denominator");
  return d == FD_DENOM_ALL ? fairdist::Denominator::kAll
                           : fairdist::Denominator::kDefined;
}

fd_text* NewText(std::string s) { return new fd_text{std::move(s)}; }

void SetRatio(const fairdist::Rational& r, int64_t* num, int64_t* den) {
  Require(num != nullptr && den != nullptr, "null output pointer");
  *num = r.num();
  *den = r.den();
}

fairdist::Rational RatioArg(const char* text, const char* name) {
  if (text == nullptr) {
    fairdist::Fail(ErrorCode::kInvalidArgument,
                   std::string("missing ratio ") + name);
  }
  return fairdist::Rational::Parse(text);
}

}  // namespace

extern "C" {

fd_status fd_context_new(unsigned threads, fd_context** out) {
  if (out == nullptr) return FD_ERR_USAGE;
  try {
    *out = new fd_context{fairdist::Executor(threads), {}};
  } catch (...) {
    return FD_ERR_INTERNAL;
  }
  return FD_OK;
}

void fd_context_free(fd_context* ctx) { delete ctx; }

const char* fd_last_error(const fd_context* ctx) {
  return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

const char* fd_measure_name(fd_measure m) {
  if (m < FD_ACCURACY_EQUALITY || m > FD_NEGATIVE_PREDICTIVE_PARITY) return "";
  return fairdist::MeasureName(static_cast<fairdist::MeasureId>(m)).data();
}

fd_status fd_measure_parse(fd_context* ctx, const char* name, fd_measure* out) {
  return Guard(ctx, [&] {
    Require(name != nullptr && out != nullptr, "null argument");
    auto m = fairdist::ParseMeasure(name);
    if (!m) {
      fairdist::Fail(ErrorCode::kInvalidArgument,
                     std::string("unknown measure '") + name + "'");
    }
    *out = static_cast<fd_measure>(*m);
  });
}

fd_status fd_performance_parse(fd_context* ctx, const char* name,
                               fd_performance* out) {
  return Guard(ctx, [&] {
    Require(name != nullptr && out != nullptr, "null argument");
    auto m = fairdist::ParsePerformance(name);
    if (!m) {
      fairdist::Fail(ErrorCode::kInvalidArgument,
                     std::string("unknown performance measure '") + name + "'");
    }
    *out = *m == fairdist::PerformanceMeasure::kAccuracy ? FD_PERF_ACCURACY
                                                         : FD_PERF_GMEAN;
  });
}

const char* fd_text_data(const fd_text* t) {
  return t == nullptr ? "" : t->data.c_str();
}
size_t fd_text_size(const fd_text* t) { return t == nullptr ? 0 : t->data.size(); }
void fd_text_free(fd_text* t) { delete t; }

fd_status fd_total_count(fd_context* ctx, int64_t n, fd_text** out) {
  return Guard(ctx, [&] {
    Require(out != nullptr, "null output pointer");
    *out = NewText(fairdist::TotalCount(n).ToString());
  });
}

fd_status fd_stratum_count(fd_context* ctx, int64_t n, int64_t p, int64_t n_p,
                           fd_text** out) {
  return Guard(ctx, [&] {
    Require(out != nullptr, "null output pointer");
    *out = NewText(fairdist::StratumCount(fairdist::Stratum(n, p, n_p)).ToString());
  });
}

fd_status fd_stratum_from_ratios(fd_context* ctx, int64_t n, const char* ir,
                                 const char* gr, int64_t* p, int64_t* n_p) {
  return Guard(ctx, [&] {
    Require(p != nullptr && n_p != nullptr, "null output pointer");
    auto s = fairdist::Stratum::FromRatios(n, RatioArg(ir, "IR"),
                                           RatioArg(gr, "GR"));
    *p = s.p();
    *n_p = s.n_p();
  });
}

fd_status fd_pmf_compute(fd_context* ctx, fd_measure m, int64_t n, int64_t p,
                         int64_t n_p, int brute_force, fd_pmf** out) {
  return Guard(ctx, [&] {
    Require(out != nullptr, "null output pointer");
    fairdist::Stratum s(n, p, n_p);
    auto id = Measure(m);
    auto pmf = brute_force ? fairdist::StratumPmfBruteForce(id, s, ctx->executor)
                           : fairdist::StratumPmfFast(id, s, ctx->executor);
    *out = new fd_pmf{std::move(pmf), id, s};
  });
}

void fd_pmf_free(fd_pmf* pmf) { delete pmf; }

int fd_pmf_equal(const fd_pmf* a, const fd_pmf* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->pmf == b->pmf;
}

size_t fd_pmf_unique_values(const fd_pmf* pmf) {
  return pmf == nullptr ? 0 : pmf->pmf.unique_values();
}

fd_status fd_pmf_entry(fd_context* ctx, const fd_pmf* pmf, size_t i,
                       int64_t* num, int64_t* den, uint64_t* count) {
  return Guard(ctx, [&] {
    Require(pmf != nullptr && count != nullptr, "null argument");
    Require(i < pmf->pmf.unique_values(), "entry index out of range");
    auto it = std::next(pmf->pmf.entries().begin(), static_cast<long>(i));
    SetRatio(it->first, num, den);
    *count = it->second.ToUint64();
  });
}

fd_status fd_pmf_total(fd_context* ctx, const fd_pmf* pmf, uint64_t* out) {
  return Guard(ctx, [&] {
    Require(pmf != nullptr && out != nullptr, "null argument");
    *out = pmf->pmf.total().ToUint64();
  });
}

fd_status fd_pmf_undefined(fd_context* ctx, const fd_pmf* pmf, uint64_t* out) {
  return Guard(ctx, [&] {
    Require(pmf != nullptr && out != nullptr, "null argument");
    *out = pmf->pmf.undefined_count().ToUint64();
  });
}

fd_status fd_pmf_perfect_fairness(fd_context* ctx, const fd_pmf* pmf,
                                  fd_denominator d, int64_t* num, int64_t* den) {
  return Guard(ctx, [&] {
    Require(pmf != nullptr, "null pmf");
    SetRatio(fairdist::PerfectFairnessProbability(pmf->pmf, Denom(d)), num, den);
  });
}

fd_status fd_pmf_undefined_probability(fd_context* ctx, const fd_pmf* pmf,
                                       int64_t* num, int64_t* den) {
  return Guard(ctx, [&] {
    Require(pmf != nullptr, "null pmf");
    SetRatio(fairdist::UndefinedProbability(pmf->pmf), num, den);
  });
}

fd_status fd_pmf_export(fd_context* ctx, const fd_pmf* pmf, fd_format f,
                        fd_text** out) {
  return Guard(ctx, [&] {
    Require(pmf != nullptr && out != nullptr, "null argument");
    if (f == FD_FORMAT_CSV) {
      *out = NewText(fairdist::PmfToCsv(pmf->pmf));
      return;
    }
    Require(f == FD_FORMAT_JSON, "pmf export supports json or csv");
    Require(pmf->measure && pmf->stratum,
            "JSON export needs the measure and stratum of the pmf");
    *out = NewText(fairdist::PmfToJson(*pmf->measure, *pmf->stratum, pmf->pmf));
  });
}

fd_status fd_pmf_histogram_export(fd_context* ctx, const fd_pmf* pmf, int bins,
                                  fd_format f, fd_text** out) {
  return Guard(ctx, [&] {
    Require(pmf != nullptr && out != nullptr, "null argument");
    auto h = fairdist::BinHistogram(pmf->pmf, bins);
    if (f == FD_FORMAT_CSV) {
      *out = NewText(fairdist::HistogramToCsv(h));
    } else {
      Require(f == FD_FORMAT_JSON, "histogram export supports json or csv");
      *out = NewText(fairdist::HistogramToJson(h));
    }
  });
}

fd_status fd_pmf_parse(fd_context* ctx, const char* text, size_t size,
                       fd_pmf** out) {
  return Guard(ctx, [&] {
    Require(text != nullptr && out != nullptr, "null argument");
    auto parsed = fairdist::ParsePmf(std::string_view(text, size));
    *out = new fd_pmf{std::move(parsed.pmf), parsed.measure, parsed.stratum};
  });
}

fd_status fd_pmf_histogram(fd_context* ctx, const fd_pmf* pmf, int bins,
                           uint64_t* counts, uint64_t* undefined) {
  return Guard(ctx, [&] {
    Require(pmf != nullptr && counts != nullptr && undefined != nullptr,
            "null argument");
    auto h = fairdist::BinHistogram(pmf->pmf, bins);
    for (int i = 0; i < bins; ++i) {
      counts[i] = h.bin_counts[static_cast<std::size_t>(i)].ToUint64();
    }
    *undefined = h.undefined_count.ToUint64();
  });
}

fd_status fd_sweep(fd_context* ctx, fd_measure m, int64_t n, fd_axis axis,
                   const char* grid, const char* fixed, fd_statistic s,
                   fd_denominator d, fd_format f, fd_text** out) {
  return Guard(ctx, [&] {
    Require(grid != nullptr && out != nullptr, "null argument");
    Require(axis == FD_AXIS_IR || axis == FD_AXIS_GR, "unknown axis");
    Require(s >= FD_STAT_PERFECT_FAIRNESS && s <= FD_STAT_UNIQUE_VALUES,
            "unknown statistic");
    auto points = fairdist::ParseRatioList(grid);
    auto curve = fairdist::Sweep(
        Measure(m), n,
        axis == FD_AXIS_IR ? fairdist::SweepAxis::kImbalanceRatio
                           : fairdist::SweepAxis::kGroupRatio,
        points, RatioArg(fixed, axis == FD_AXIS_IR ? "GR" : "IR"),
        static_cast<fairdist::SweepStatistic>(s), Denom(d), ctx->executor);
    if (f == FD_FORMAT_CSV) {
      *out = NewText(fairdist::SweepToCsv(curve));
    } else {
      Require(f == FD_FORMAT_JSON, "sweep export supports json or csv");
      *out = NewText(fairdist::SweepToJson(curve));
    }
  });
}

fd_status fd_heatmap_compute(fd_context* ctx, fd_measure m, fd_performance perf,
                             int64_t n, const char* ir, const char* gr,
                             int fairness_bins, int performance_bins,
                             fd_heatmap** out) {
  return Guard(ctx, [&] {
    Require(out != nullptr, "null output pointer");
    Require(perf == FD_PERF_ACCURACY || perf == FD_PERF_GMEAN,
            "unknown performance measure");
    Require((ir == nullptr) == (gr == nullptr),
            "a stratified heatmap needs both IR and GR");
    auto p = perf == FD_PERF_ACCURACY ? fairdist::PerformanceMeasure::kAccuracy
                                      : fairdist::PerformanceMeasure::kGMean;
    fairdist::Heatmap h =
        ir == nullptr
            ? fairdist::JointHeatmap(Measure(m), p, n, fairness_bins,
                                     performance_bins, ctx->executor)
            : fairdist::StratifiedHeatmap(
                  Measure(m), p,
                  fairdist::Stratum::FromRatios(n, RatioArg(ir, "IR"),
                                                RatioArg(gr, "GR")),
                  fairness_bins, performance_bins, ctx->executor);
    *out = new fd_heatmap{std::move(h)};
  });
}

void fd_heatmap_free(fd_heatmap* h) { delete h; }

fd_status fd_heatmap_export(fd_context* ctx, const fd_heatmap* h, fd_format f,
                            fd_text** out) {
  return Guard(ctx, [&] {
    Require(h != nullptr && out != nullptr, "null argument");
    if (f == FD_FORMAT_CSV) {
      *out = NewText(fairdist::HeatmapToCsv(h->heatmap));
    } else {
      Require(f == FD_FORMAT_JSON, "heatmap export supports json or csv");
      *out = NewText(fairdist::HeatmapToJson(h->heatmap));
    }
  });
}

fd_status fd_report_compute(fd_context* ctx, int64_t n, const char* ir_grid,
                            const char* gr_grid, const fd_thresholds* thresholds,
                            fd_report** out) {
  return Guard(ctx, [&] {
    Require(ir_grid != nullptr && gr_grid != nullptr && out != nullptr,
            "null argument");
    fairdist::PropertyThresholds t;
    if (thresholds != nullptr) {
      auto set = [](const char* text, fairdist::Rational* field) {
        if (text != nullptr) *field = fairdist::Rational::Parse(text);
      };
      set(thresholds->immunity_tv, &t.immunity_tv);
      set(thresholds->resolution_ratio, &t.resolution_ratio);
      set(thresholds->perfect_fairness_ratio, &t.perfect_fairness_ratio);
      set(thresholds->undefined_trend_ratio, &t.undefined_trend_ratio);
    }
    auto grid = fairdist::RatioGrid::Make(n, fairdist::ParseRatioList(ir_grid),
                                          fairdist::ParseRatioList(gr_grid));
    *out = new fd_report{
        fairdist::BuildPropertyReport(grid, t, ctx->executor)};
  });
}

void fd_report_free(fd_report* r) { delete r; }

fd_status fd_report_export(fd_context* ctx, const fd_report* r, fd_format f,
                           fd_text** out) {
  return Guard(ctx, [&] {
    Require(r != nullptr && out != nullptr, "null argument");
    switch (f) {
      case FD_FORMAT_JSON:
        *out = NewText(fairdist::ReportToJson(r->report));
        return;
      case FD_FORMAT_TABLE:
        *out = NewText(fairdist::ReportToTable(r->report));
        return;
      case FD_FORMAT_CSV:
        break;
    }
    fairdist::Fail(ErrorCode::kInvalidArgument,
                   "report export supports json or table");
  });
}

fd_status fd_report_verdict(fd_context* ctx, const fd_report* r, int property,
                            fd_measure m, fd_verdict* out) {
  return Guard(ctx, [&] {
    Require(r != nullptr && out != nullptr, "null argument");
    Require(property >= 0 && property < 8, "property index out of range");
    const auto& cell = r->report.Cell(
        fairdist::kAllProperties[static_cast<std::size_t>(property)],
        Measure(m));
    *out = static_cast<fd_verdict>(cell.verdict);
  });
}

fd_status fd_measure_batch(fd_context* ctx, const char* input, size_t size,
                           fd_text** out) {
  return Guard(ctx, [&] {
    Require(input != nullptr && out != nullptr, "null argument");
    std::istringstream in{std::string(input, size)};
    std::ostringstream result;
    fairdist::ScoreBatch(in, result);
    *out = NewText(result.str());
  });
}

fd_status fd_render_svg(fd_context* ctx, const char* text, size_t size,
                        fd_plot_kind kind, int bins, fd_text** out) {
  return Guard(ctx, [&] {
    Require(text != nullptr && out != nullptr, "null argument");
    Require(kind >= FD_PLOT_HISTOGRAM && kind <= FD_PLOT_HEATMAP,
            "unknown plot kind");
    *out = NewText(fairdist::RenderSvg(std::string_view(text, size),
                                       static_cast<fairdist::PlotKind>(kind),
                                       bins));
  });
}

}  // extern "C"
