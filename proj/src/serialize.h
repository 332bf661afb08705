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

#ifndef FAIRDIST_SERIALIZE_H_
#define FAIRDIST_SERIALIZE_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distribution.h"
#include "properties.h"

namespace fairdist {

enum class Format { kJson, kCsv };

// A pmf plus the metadata carried by the JSON export. The CSV variant has no
// metadata, so parsed CSV leaves the optionals empty.
struct LabeledPmf {
  std::optional<MeasureId> measure;
  std::optional<Stratum> stratum;
  Pmf pmf;
};

// JSON: {"n","p","n_p","measure","total","undefined_count",
//        "entries":[{"num","den","count"}...]} sorted by value.
// CSV: value_num,value_den,count rows, then UNDEFINED,,<count>.
std::string PmfToJson(MeasureId measure, const Stratum& s, const Pmf& pmf);
std::string PmfToCsv(const Pmf& pmf);
// Detects JSON vs CSV from the first non-blank character. Throws
// kInvalidArgument naming the first offending field.
LabeledPmf ParsePmf(std::string_view text);

std::string HistogramToJson(const BinnedHistogram& h);
std::string HistogramToCsv(const BinnedHistogram& h);

std::string_view AxisName(SweepAxis axis);            // "ir" | "gr"
std::string_view StatisticName(SweepStatistic s);     // "perfect-fairness"...
std::string_view DenominatorName(Denominator d);      // "all" | "defined"
std::string SweepToJson(const SweepCurve& curve);
std::string SweepToCsv(const SweepCurve& curve);

// Points of an exported sweep, enough to draw it.
struct CurveData {
  std::string label;
  std::vector<std::pair<double, double>> points;
};
CurveData ParseCurve(std::string_view text);

// CSV rows: fairness_bin,perf_bin,count for every cell, then marginal rows
// with UNDEFINED in the undefined coordinate.
std::string HeatmapToJson(const Heatmap& h);
std::string HeatmapToCsv(const Heatmap& h);

// Cell grid of an exported heatmap.
struct HeatmapData {
  int fairness_bins = 0;
  int performance_bins = 0;
  std::vector<Count> cells;  // [fairness][performance]
  std::string label;
};
HeatmapData ParseHeatmap(std::string_view text);

std::string ReportToJson(const PropertyReport& report);
// Text table in the layout of the properties-by-measures matrix.
std::string ReportToTable(const PropertyReport& report);

// "1/28" style list parsing for flags; decimals must convert exactly.
std::vector<Rational> ParseRatioList(std::string_view text);

}  // namespace fairdist

#endif  // FAIRDIST_SERIALIZE_H_
