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

#include "svg.h"

#include <algorithm>
#include <cstdio>

#include "error.h"

namespace fairdist {
namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 600;
constexpr double kLeft = 70;
constexpr double kRight = 30;
constexpr double kTop = 50;
constexpr double kBottom = 70;
constexpr double kPlotWidth = kWidth - kLeft - kRight;
constexpr double kPlotHeight = kHeight - kTop - kBottom;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Open(std::string_view title) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
      "width=\"800\" height=\"600\" font-family=\"sans-serif\" "
      "font-size=\"12\">\n"
      "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out += "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-size=\"16\">" +
         Escape(title) + "</text>\n";
  return out;
}

std::string Text(double x, double y, std::string_view s,
                 std::string_view anchor = "middle") {
  return "<text x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" text-anchor=\"" +
         std::string(anchor) + "\">" + Escape(s) + "</text>\n";
}

std::string Line(double x1, double y1, double x2, double y2) {
  return "<line x1=\"" + Num(x1) + "\" y1=\"" + Num(y1) + "\" x2=\"" +
         Num(x2) + "\" y2=\"" + Num(y2) + "\" stroke=\"black\"/>\n";
}

std::string Axes() {
  return Line(kLeft, kTop + kPlotHeight, kLeft + kPlotWidth,
              kTop + kPlotHeight) +
         Line(kLeft, kTop, kLeft, kTop + kPlotHeight);
}

std::string YTicks(double max_value) {
  std::string out;
  for (int i = 0; i <= 4; ++i) {
    double v = max_value * i / 4;
    double y = kTop + kPlotHeight - kPlotHeight * i / 4;
    out += Line(kLeft - 5, y, kLeft, y);
    out += Text(kLeft - 8, y + 4, Num(v), "end");
  }
  return out;
}

}  // namespace

std::optional<PlotKind> ParsePlotKind(std::string_view name) {
  if (name == "histogram") return PlotKind::kHistogram;
  if (name == "curve") return PlotKind::kCurve;
  if (name == "heatmap") return PlotKind::kHeatmap;
  return std::nullopt;
}

std::string RenderHistogramSvg(const BinnedHistogram& h,
                               std::string_view title) {
  Count total = h.undefined_count;
  for (Count c : h.bin_counts) total += c;
  if (total == Count(0)) Fail(ErrorCode::kInvalidArgument, "empty pmf");
  double max_p = h.undefined_count.ToDouble() / total.ToDouble();
  for (Count c : h.bin_counts) {
    max_p = std::max(max_p, c.ToDouble() / total.ToDouble());
  }
  // Value bins, one empty slot, then the undefined bar.
  double bar = kPlotWidth / (h.bin_count + 2);
  std::string out = Open(title) + Axes() + YTicks(max_p);
  auto rect = [&](double x, Count c, std::string_view cls,
                  std::string_view fill, const std::string& data) {
    double height = kPlotHeight * (c.ToDouble() / total.ToDouble()) / max_p;
    return "<rect class=\"" + std::string(cls) + "\" " + data + "x=\"" +
           Num(x) + "\" y=\"" + Num(kTop + kPlotHeight - height) +
           "\" width=\"" + Num(bar) + "\" height=\"" + Num(height) +
           "\" fill=\"" + std::string(fill) + "\"/>\n";
  };
  for (int i = 0; i < h.bin_count; ++i) {
    Count c = h.bin_counts[static_cast<std::size_t>(i)];
    if (c == Count(0)) continue;
    out += rect(kLeft + bar * i, c, "bar", "#1f77b4",
                "data-bin=\"" + std::to_string(i) + "\" data-count=\"" +
                    c.ToString() + "\" ");
  }
  if (h.undefined_count != Count(0)) {
    out += rect(kLeft + bar * (h.bin_count + 1), h.undefined_count,
                "undefined", "#d62728",
                "data-count=\"" + h.undefined_count.ToString() + "\" ");
  }
  double axis_end = kLeft + bar * h.bin_count;
  out += Text(kLeft, kTop + kPlotHeight + 18, "-1");
  out += Text((kLeft + axis_end) / 2, kTop + kPlotHeight + 18, "0");
  out += Text(axis_end, kTop + kPlotHeight + 18, "1");
  out += Text(kLeft + bar * (h.bin_count + 1.5), kTop + kPlotHeight + 18,
              "undef.");
  out += Text(kLeft + kPlotWidth / 2, kHeight - 20, "measure value");
  out += "</svg>\n";
  return out;
}

std::string RenderCurveSvg(const CurveData& curve) {
  if (curve.points.empty()) {
    Fail(ErrorCode::kInvalidArgument, "curve has no points");
  }
  double max_y = 0;
  for (const auto& [x, y] : curve.points) max_y = std::max(max_y, y);
  if (max_y <= 0) max_y = 1;
  std::string out = Open(curve.label) + Axes() + YTicks(max_y);
  auto px = [](double x) { return kLeft + kPlotWidth * x; };
  auto py = [&](double y) { return kTop + kPlotHeight - kPlotHeight * y / max_y; };
  std::string points;
  for (const auto& [x, y] : curve.points) {
    points += (points.empty() ? "" : " ") + Num(px(x)) + "," + Num(py(y));
  }
  out += "<polyline class=\"curve\" fill=\"none\" stroke=\"#1f77b4\" "
         "stroke-width=\"2\" points=\"" + points + "\"/>\n";
  for (const auto& [x, y] : curve.points) {
    out += "<circle class=\"point\" cx=\"" + Num(px(x)) + "\" cy=\"" +
           Num(py(y)) + "\" r=\"3\" fill=\"#1f77b4\"/>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    out += Text(px(i / 4.0), kTop + kPlotHeight + 18, Num(i / 4.0));
  }
  out += Text(kLeft + kPlotWidth / 2, kHeight - 20, "ratio");
  out += "</svg>\n";
  return out;
}

std::string RenderHeatmapSvg(const HeatmapData& heatmap) {
  if (heatmap.fairness_bins <= 0 || heatmap.performance_bins <= 0) {
    Fail(ErrorCode::kInvalidArgument, "heatmap has no cells");
  }
  Count max_c;
  for (Count c : heatmap.cells) max_c = std::max(max_c, c);
  double w = kPlotWidth / heatmap.fairness_bins;
  double h = kPlotHeight / heatmap.performance_bins;
  std::string out = Open(heatmap.label);
  for (int f = 0; f < heatmap.fairness_bins; ++f) {
    for (int p = 0; p < heatmap.performance_bins; ++p) {
      Count c = heatmap.cells[static_cast<std::size_t>(f) *
                                  heatmap.performance_bins + p];
      double t = max_c == Count(0) ? 0 : c.ToDouble() / max_c.ToDouble();
      int shade = 255 - static_cast<int>(t * 200 + 0.5);
      char fill[16];
      std::snprintf(fill, sizeof(fill), "#%02x%02xff", shade, shade);
      out += "<rect class=\"cell\" data-f=\"" + std::to_string(f) +
             "\" data-p=\"" + std::to_string(p) + "\" data-count=\"" +
             c.ToString() + "\" x=\"" + Num(kLeft + w * f) + "\" y=\"" +
             Num(kTop + kPlotHeight - h * (p + 1)) + "\" width=\"" + Num(w) +
             "\" height=\"" + Num(h) + "\" fill=\"" + fill + "\"/>\n";
    }
  }
  out += Axes();
  out += Text(kLeft, kTop + kPlotHeight + 18, "-1");
  out += Text(kLeft + kPlotWidth / 2, kTop + kPlotHeight + 18, "0");
  out += Text(kLeft + kPlotWidth, kTop + kPlotHeight + 18, "1");
  out += Text(kLeft - 8, kTop + kPlotHeight + 4, "0", "end");
  out += Text(kLeft - 8, kTop + 4, "1", "end");
  out += Text(kLeft + kPlotWidth / 2, kHeight - 20, "fairness value");
  out += "</svg>\n";
  return out;
}

std::string RenderSvg(std::string_view text, PlotKind kind, int bins) {
  switch (kind) {
    case PlotKind::kHistogram: {
      LabeledPmf parsed = ParsePmf(text);
      if (parsed.pmf.empty()) Fail(ErrorCode::kInvalidArgument, "empty pmf");
      std::string title =
          parsed.measure ? std::string(MeasureName(*parsed.measure)) : "pmf";
      if (parsed.stratum) title += " " + parsed.stratum->ToString();
      return RenderHistogramSvg(BinHistogram(parsed.pmf, bins), title);
    }
    case PlotKind::kCurve:
      return RenderCurveSvg(ParseCurve(text));
    case PlotKind::kHeatmap:
      return RenderHeatmapSvg(ParseHeatmap(text));
  }
  Fail(ErrorCode::kInternal, "unknown plot kind");
}

}  // namespace fairdist
