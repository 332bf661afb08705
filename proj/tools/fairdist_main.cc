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

// Command-line front end. Talks to the library only through the C API.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fairdist/fairdist.h"

namespace {

// Carries a status code out of a failed library call.
struct Failure {
  fd_status status;
  std::string message;
};

struct ContextDeleter {
  void operator()(fd_context* c) const { fd_context_free(c); }
};
struct TextDeleter {
  void operator()(fd_text* t) const { fd_text_free(t); }
};
struct PmfDeleter {
  void operator()(fd_pmf* p) const { fd_pmf_free(p); }
};
struct HeatmapDeleter {
  void operator()(fd_heatmap* h) const { fd_heatmap_free(h); }
};
struct ReportDeleter {
  void operator()(fd_report* r) const { fd_report_free(r); }
};
using Text = std::unique_ptr<fd_text, TextDeleter>;

struct Options {
  int64_t n = 0;
  std::string ir;
  std::string gr;
  std::string measure = "accuracy-equality";
  std::string perf = "accuracy";
  std::string vary = "ir";
  std::string grid;
  std::string ir_grid;
  std::string gr_grid;
  int bins = 41;
  int perf_bins = 20;
  std::string format = "json";
  std::string out;
  std::string in;
  std::string kind = "histogram";
  std::string statistic = "perfect-fairness";
  std::string denominator = "all";
  unsigned threads = 0;
  bool bruteforce = false;
  bool binned = false;
  std::string immunity_tv;
  std::string resolution_ratio;
  std::string pf_ratio;
  std::string trend_ratio;
};

class Runner {
 public:
  explicit Runner(unsigned threads) {
    fd_context* raw = nullptr;
    if (fd_context_new(threads, &raw) != FD_OK) {
      throw Failure{FD_ERR_INTERNAL, "cannot create context"};
    }
    ctx_.reset(raw);
  }

  fd_context* ctx() { return ctx_.get(); }

  void Check(fd_status s) {
    if (s != FD_OK) throw Failure{s, fd_last_error(ctx_.get())};
  }

  fd_measure Measure(const std::string& name) {
    fd_measure m;
    Check(fd_measure_parse(ctx(), name.c_str(), &m));
    return m;
  }

 private:
  std::unique_ptr<fd_context, ContextDeleter> ctx_;
};

[[noreturn]] void Usage(const std::string& message) {
  throw Failure{FD_ERR_USAGE, message};
}

std::string TakeText(fd_text* raw) {
  Text t(raw);
  return std::string(fd_text_data(t.get()), fd_text_size(t.get()));
}

fd_format Format(const std::string& name, bool allow_table) {
  if (name == "json") return FD_FORMAT_JSON;
  if (name == "csv") return FD_FORMAT_CSV;
  if (name == "table" && allow_table) return FD_FORMAT_TABLE;
  Usage("unsupported --format '" + name + "'");
}

fd_denominator Denominator(const std::string& name) {
  if (name == "all") return FD_DENOM_ALL;
  if (name == "defined") return FD_DENOM_DEFINED;
  Usage("--denominator must be all or defined");
}

std::string ReadInput(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{FD_ERR_IO, "cannot read '" + path + "'"};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Writes to stdout, or to `path` through a temporary file and a rename so a
// failed run never leaves a partial file behind.
void WriteOutput(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    std::cout.flush();
    if (!std::cout) throw Failure{FD_ERR_IO, "cannot write to stdout"};
    return;
  }
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{FD_ERR_IO, "cannot write '" + path + "'"};
    out << data;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw Failure{FD_ERR_IO, "cannot write '" + path + "'"};
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Failure{FD_ERR_IO, "cannot write '" + path + "'"};
  }
}

void RequireN(const Options& o) {
  if (o.n <= 0) Usage("--n must be a positive integer");
}

void RequireRatios(const Options& o) {
  if (o.ir.empty() || o.gr.empty()) Usage("--ir and --gr are required");
}

std::string RunCount(Runner& r, const Options& o) {
  RequireN(o);
  fd_text* t = nullptr;
  if (o.ir.empty() && o.gr.empty()) {
    r.Check(fd_total_count(r.ctx(), o.n, &t));
  } else {
    RequireRatios(o);
    int64_t p = 0, n_p = 0;
    r.Check(fd_stratum_from_ratios(r.ctx(), o.n, o.ir.c_str(), o.gr.c_str(),
                                   &p, &n_p));
    r.Check(fd_stratum_count(r.ctx(), o.n, p, n_p, &t));
  }
  return TakeText(t) + "\n";
}

std::string RunPmf(Runner& r, const Options& o) {
  RequireN(o);
  RequireRatios(o);
  fd_measure m = r.Measure(o.measure);
  fd_format f = Format(o.format, false);
  int64_t p = 0, n_p = 0;
  r.Check(fd_stratum_from_ratios(r.ctx(), o.n, o.ir.c_str(), o.gr.c_str(), &p,
                                 &n_p));
  fd_pmf* raw = nullptr;
  r.Check(fd_pmf_compute(r.ctx(), m, o.n, p, n_p, o.bruteforce ? 1 : 0, &raw));
  std::unique_ptr<fd_pmf, PmfDeleter> pmf(raw);
  fd_text* t = nullptr;
  if (o.binned) {
    r.Check(fd_pmf_histogram_export(r.ctx(), pmf.get(), o.bins, f, &t));
  } else {
    r.Check(fd_pmf_export(r.ctx(), pmf.get(), f, &t));
  }
  return TakeText(t);
}

fd_statistic Statistic(const std::string& name) {
  if (name == "perfect-fairness") return FD_STAT_PERFECT_FAIRNESS;
  if (name == "undefined") return FD_STAT_UNDEFINED;
  if (name == "unique-values") return FD_STAT_UNIQUE_VALUES;
  Usage("--statistic must be perfect-fairness, undefined or unique-values");
}

std::string RunSweep(Runner& r, const Options& o) {
  RequireN(o);
  if (o.grid.empty()) Usage("--grid is required");
  fd_axis axis;
  std::string fixed;
  if (o.vary == "ir") {
    axis = FD_AXIS_IR;
    fixed = o.gr;
    if (fixed.empty()) Usage("--gr fixes the other axis when --vary ir");
  } else if (o.vary == "gr") {
    axis = FD_AXIS_GR;
    fixed = o.ir;
    if (fixed.empty()) Usage("--ir fixes the other axis when --vary gr");
  } else {
    Usage("--vary must be ir or gr");
  }
  fd_text* t = nullptr;
  r.Check(fd_sweep(r.ctx(), r.Measure(o.measure), o.n, axis, o.grid.c_str(),
                   fixed.c_str(), Statistic(o.statistic),
                   Denominator(o.denominator), Format(o.format, false), &t));
  return TakeText(t);
}

std::string RunHeatmap(Runner& r, const Options& o) {
  if (o.n <= 0) Usage("--n must be a positive integer");
  fd_performance perf;
  r.Check(fd_performance_parse(r.ctx(), o.perf.c_str(), &perf));
  if (o.ir.empty() != o.gr.empty()) {
    Usage("a stratified heatmap needs both --ir and --gr");
  }
  fd_format f = Format(o.format, false);
  fd_heatmap* raw = nullptr;
  r.Check(fd_heatmap_compute(r.ctx(), r.Measure(o.measure), perf, o.n,
                             o.ir.empty() ? nullptr : o.ir.c_str(),
                             o.gr.empty() ? nullptr : o.gr.c_str(), o.bins,
                             o.perf_bins, &raw));
  std::unique_ptr<fd_heatmap, HeatmapDeleter> h(raw);
  fd_text* t = nullptr;
  r.Check(fd_heatmap_export(r.ctx(), h.get(), f, &t));
  return TakeText(t);
}

std::string RunProperties(Runner& r, const Options& o) {
  RequireN(o);
  std::string ir = o.ir_grid.empty() ? o.grid : o.ir_grid;
  std::string gr = o.gr_grid.empty() ? o.grid : o.gr_grid;
  if (ir.empty() || gr.empty()) Usage("--grid (or --ir-grid and --gr-grid) is required");
  fd_format f = Format(o.format, true);
  if (f == FD_FORMAT_CSV) Usage("properties supports --format json or table");
  auto opt = [](const std::string& s) { return s.empty() ? nullptr : s.c_str(); };
  fd_thresholds th{opt(o.immunity_tv), opt(o.resolution_ratio),
                   opt(o.pf_ratio), opt(o.trend_ratio)};
  fd_report* raw = nullptr;
  r.Check(fd_report_compute(r.ctx(), o.n, ir.c_str(), gr.c_str(), &th, &raw));
  std::unique_ptr<fd_report, ReportDeleter> report(raw);
  fd_text* t = nullptr;
  r.Check(fd_report_export(r.ctx(), report.get(), f, &t));
  return TakeText(t);
}

std::string RunMeasure(Runner& r, const Options& o) {
  std::string input = ReadInput(o.in);
  fd_text* t = nullptr;
  r.Check(fd_measure_batch(r.ctx(), input.data(), input.size(), &t));
  return TakeText(t);
}

std::string RunPlot(Runner& r, const Options& o) {
  fd_plot_kind kind;
  if (o.kind == "histogram") {
    kind = FD_PLOT_HISTOGRAM;
  } else if (o.kind == "curve") {
    kind = FD_PLOT_CURVE;
  } else if (o.kind == "heatmap") {
    kind = FD_PLOT_HEATMAP;
  } else {
    Usage("--kind must be histogram, curve or heatmap");
  }
  std::string input = ReadInput(o.in);
  fd_text* t = nullptr;
  r.Check(fd_render_svg(r.ctx(), input.data(), input.size(), kind, o.bins, &t));
  return TakeText(t);
}

unsigned DefaultThreads() {
  const char* env = std::getenv("FAIRDIST_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') Usage("FAIRDIST_THREADS must be a non-negative integer");
  return static_cast<unsigned>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distributions of group fairness measures"};
  app.require_subcommand(1);
  Options o;
  std::optional<unsigned> threads;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output file (default stdout)");
    sub->add_option("--threads", threads,
                    "Worker threads (default FAIRDIST_THREADS or all cores)");
  };
  auto ratios = [&](CLI::App* sub) {
    sub->add_option("--ir", o.ir, "Imbalance ratio P/n, e.g. 1/28");
    sub->add_option("--gr", o.gr, "Group ratio n_p/n, e.g. 1/2");
  };

  auto* count = app.add_subcommand("count", "Count confusion pairs");
  count->add_option("--n", o.n, "Dataset size")->required();
  ratios(count);
  common(count);

  auto* pmf = app.add_subcommand("pmf", "Exact pmf of a measure in a stratum");
  pmf->add_option("--n", o.n, "Dataset size")->required();
  ratios(pmf);
  pmf->add_option("--measure", o.measure, "Fairness measure");
  pmf->add_option("--format", o.format, "json or csv");
  pmf->add_flag("--binned", o.binned, "Export the binned histogram instead");
  pmf->add_option("--bins", o.bins, "Histogram bins (odd)");
  pmf->add_flag("--bruteforce", o.bruteforce, "Enumerate every pair");
  common(pmf);

  auto* sweep = app.add_subcommand("sweep", "Statistic along one ratio axis");
  sweep->add_option("--n", o.n, "Dataset size")->required();
  sweep->add_option("--measure", o.measure, "Fairness measure");
  sweep->add_option("--vary", o.vary, "ir or gr");
  sweep->add_option("--grid", o.grid, "Comma-separated ratios")->required();
  ratios(sweep);
  sweep->add_option("--statistic", o.statistic,
                    "perfect-fairness, undefined or unique-values");
  sweep->add_option("--denominator", o.denominator, "all or defined");
  sweep->add_option("--format", o.format, "json or csv");
  common(sweep);

  auto* heatmap =
      app.add_subcommand("heatmap", "Joint fairness x performance histogram");
  heatmap->add_option("--n", o.n, "Dataset size (default 32)");
  heatmap->add_option("--measure", o.measure, "Fairness measure");
  heatmap->add_option("--perf", o.perf, "accuracy or g-mean");
  ratios(heatmap);
  heatmap->add_option("--bins", o.bins, "Fairness bins (odd)");
  heatmap->add_option("--perf-bins", o.perf_bins, "Performance bins");
  heatmap->add_option("--format", o.format, "json or csv");
  common(heatmap);

  auto* props = app.add_subcommand("properties", "Property report");
  props->add_option("--n", o.n, "Dataset size")->required();
  props->add_option("--grid", o.grid, "Ratios used on both axes");
  props->add_option("--ir-grid", o.ir_grid, "IR axis ratios");
  props->add_option("--gr-grid", o.gr_grid, "GR axis ratios");
  props->add_option("--format", o.format, "json or table");
  props->add_option("--immunity-tv", o.immunity_tv, "Immunity TV threshold");
  props->add_option("--resolution-ratio", o.resolution_ratio,
                    "Resolution min/max threshold");
  props->add_option("--pf-ratio", o.pf_ratio,
                    "Perfect-fairness max/min threshold");
  props->add_option("--trend-ratio", o.trend_ratio,
                    "Undefined-value trend factor");
  common(props);

  auto* measure =
      app.add_subcommand("measure", "Score JSON-lines confusion pairs");
  measure->add_option("--in", o.in, "Input file (default stdin)");
  common(measure);

  auto* plot = app.add_subcommand("plot", "Render an exported file as SVG");
  plot->add_option("--in", o.in, "Exported JSON or CSV (default stdin)");
  plot->add_option("--kind", o.kind, "histogram, curve or heatmap");
  plot->add_option("--bins", o.bins, "Histogram bins (odd)");
  common(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "fairdist: error: " << e.what() << "\n";
    return FD_ERR_USAGE;
  }

  try {
    Runner runner(threads ? *threads : DefaultThreads());
    std::string output;
    if (count->parsed()) {
      output = RunCount(runner, o);
    } else if (pmf->parsed()) {
      output = RunPmf(runner, o);
    } else if (sweep->parsed()) {
      output = RunSweep(runner, o);
    } else if (heatmap->parsed()) {
      if (o.n == 0) o.n = 32;
      output = RunHeatmap(runner, o);
    } else if (props->parsed()) {
      output = RunProperties(runner, o);
    } else if (measure->parsed()) {
      output = RunMeasure(runner, o);
    } else {
      output = RunPlot(runner, o);
    }
    WriteOutput(o.out, output);
  } catch (const Failure& f) {
    std::cerr << "fairdist: error: " << f.message << "\n";
    return f.status;
  }
  return 0;
}
