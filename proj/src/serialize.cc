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

#include "serialize.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "error.h"
#include "json.hpp"

namespace fairdist {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void SchemaError(const std::string& what) {
  Fail(ErrorCode::kInvalidArgument, "schema mismatch: " + what);
}

Json CountToJson(Count c) {
  if (c.FitsUint64()) return Json(c.ToUint64());
  return Json(c.ToString());
}

Count CountFromJson(const Json& j, const std::string& field) {
  if (j.is_number_unsigned()) return Count(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return Count(static_cast<std::uint64_t>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return Count::Parse(j.get<std::string>());
  SchemaError("field '" + field + "' is not a non-negative count");
}

const Json& Require(const Json& obj, const std::string& field) {
  if (!obj.is_object() || !obj.contains(field)) {
    SchemaError("missing field '" + field + "'");
  }
  return obj.at(field);
}

std::int64_t IntField(const Json& obj, const std::string& field) {
  const Json& j = Require(obj, field);
  if (!j.is_number_integer()) SchemaError("field '" + field + "' is not an integer");
  return j.get<std::int64_t>();
}

std::string StringField(const Json& obj, const std::string& field) {
  const Json& j = Require(obj, field);
  if (!j.is_string()) SchemaError("field '" + field + "' is not a string");
  return j.get<std::string>();
}

Json Parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

bool LooksLikeJson(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string_view::npos) SchemaError("empty input");
  return text[pos] == '{';
}

std::vector<std::vector<std::string>> CsvRows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

void ExpectHeader(const std::vector<std::vector<std::string>>& rows,
                  const std::vector<std::string>& header) {
  if (rows.empty()) SchemaError("empty CSV");
  if (rows.front() != header) {
    std::string expected;
    for (const auto& h : header) expected += (expected.empty() ? "" : ",") + h;
    SchemaError("CSV header must be '" + expected + "'");
  }
}

std::int64_t ParseInt(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    SchemaError("field '" + field + "' is not an integer: '" + s + "'");
  }
}

std::string Ratio(const Rational& r) { return r.ToString(); }

Json RatioArray(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(Ratio(r));
  return a;
}

Json PointJson(const GridPoint& p) {
  return Json{{"ir", Ratio(p.ir)}, {"gr", Ratio(p.gr)}};
}

Json CountArray(const std::vector<Count>& v) {
  Json a = Json::array();
  for (Count c : v) a.push_back(CountToJson(c));
  return a;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::string_view MeasureAbbrev(MeasureId m) {
  static constexpr std::array<std::string_view, 6> kAbbrev = {
      "AE", "SP", "EO", "PE", "PPP", "NPP"};
  return kAbbrev[static_cast<std::size_t>(m)];
}

std::size_t DisplayWidth(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string Pad(const std::string& s, std::size_t width) {
  std::size_t w = DisplayWidth(s);
  return s + std::string(width > w ? width - w : 0, ' ');
}

}  // namespace

std::string PmfToJson(MeasureId measure, const Stratum& s, const Pmf& pmf) {
  Json j;
  j["n"] = s.n();
  j["p"] = s.p();
  j["n_p"] = s.n_p();
  j["measure"] = std::string(MeasureName(measure));
  j["total"] = CountToJson(pmf.total());
  j["undefined_count"] = CountToJson(pmf.undefined_count());
  Json entries = Json::array();
  for (const auto& [v, c] : pmf.entries()) {
    entries.push_back(
        Json{{"num", v.num()}, {"den", v.den()}, {"count", CountToJson(c)}});
  }
  j["entries"] = std::move(entries);
  return Dump(j);
}

std::string PmfToCsv(const Pmf& pmf) {
  std::string out = "value_num,value_den,count\n";
  for (const auto& [v, c] : pmf.entries()) {
    out += std::to_string(v.num()) + "," + std::to_string(v.den()) + "," +
           c.ToString() + "\n";
  }
  out += "UNDEFINED,," + pmf.undefined_count().ToString() + "\n";
  return out;
}

LabeledPmf ParsePmf(std::string_view text) {
  LabeledPmf out;
  Pmf::Entries entries;
  Count undefined, total;
  if (LooksLikeJson(text)) {
    Json j = Parse(text);
    total = CountFromJson(Require(j, "total"), "total");
    undefined = CountFromJson(Require(j, "undefined_count"), "undefined_count");
    const Json& list = Require(j, "entries");
    if (!list.is_array()) SchemaError("field 'entries' is not an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Json& e = list[i];
      std::string at = "entries[" + std::to_string(i) + "].";
      if (!e.is_object()) SchemaError("'" + at.substr(0, at.size() - 1) + "' is not an object");
      if (!e.contains("num")) SchemaError("missing field '" + at + "num'");
      if (!e.contains("den")) SchemaError("missing field '" + at + "den'");
      if (!e.contains("count")) SchemaError("missing field '" + at + "count'");
      if (!e["num"].is_number_integer() || !e["den"].is_number_integer() ||
          e["den"].get<std::int64_t>() == 0) {
        SchemaError("field '" + at + "num/den' is not a valid fraction");
      }
      Rational v(e["num"].get<std::int64_t>(), e["den"].get<std::int64_t>());
      entries[v] += CountFromJson(e["count"], at + "count");
    }
    if (j.contains("measure")) {
      auto m = ParseMeasure(StringField(j, "measure"));
      if (!m) SchemaError("field 'measure' names an unknown measure");
      out.measure = m;
    }
    if (j.contains("n") && j.contains("p") && j.contains("n_p")) {
      out.stratum =
          Stratum(IntField(j, "n"), IntField(j, "p"), IntField(j, "n_p"));
    }
  } else {
    auto rows = CsvRows(text);
    ExpectHeader(rows, {"value_num", "value_den", "count"});
    bool saw_undefined = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& r = rows[i];
      std::string at = "row " + std::to_string(i + 1);
      if (r.size() != 3) SchemaError(at + " does not have 3 fields");
      Count c = Count::Parse(r[2]);
      if (r[0] == "UNDEFINED") {
        undefined += c;
        saw_undefined = true;
        continue;
      }
      std::int64_t den = ParseInt(r[1], at + " value_den");
      if (den == 0) SchemaError(at + " value_den is zero");
      entries[Rational(ParseInt(r[0], at + " value_num"), den)] += c;
    }
    if (!saw_undefined) SchemaError("missing UNDEFINED row");
    total = undefined;
    for (const auto& [v, c] : entries) total += c;
  }
  out.pmf = Pmf::FromParts(std::move(entries), undefined, total);
  return out;
}

std::string HistogramToJson(const BinnedHistogram& h) {
  Json j;
  j["bin_count"] = h.bin_count;
  j["bin_width"] = Ratio(h.bin_width());
  j["bin_counts"] = CountArray(h.bin_counts);
  j["undefined_count"] = CountToJson(h.undefined_count);
  return Dump(j);
}

std::string HistogramToCsv(const BinnedHistogram& h) {
  std::string out = "bin,lower_num,lower_den,count\n";
  for (int i = 0; i < h.bin_count; ++i) {
    Rational lower = Rational::Integer(-1) + h.bin_width() * Rational::Integer(i);
    out += std::to_string(i) + "," + std::to_string(lower.num()) + "," +
           std::to_string(lower.den()) + "," +
           h.bin_counts[static_cast<std::size_t>(i)].ToString() + "\n";
  }
  out += "UNDEFINED,,," + h.undefined_count.ToString() + "\n";
  return out;
}

std::string_view AxisName(SweepAxis axis) {
  return axis == SweepAxis::kImbalanceRatio ? "ir" : "gr";
}

std::string_view StatisticName(SweepStatistic s) {
  switch (s) {
    case SweepStatistic::kPerfectFairness:
      return "perfect-fairness";
    case SweepStatistic::kUndefined:
      return "undefined";
    case SweepStatistic::kUniqueValues:
      return "unique-values";
  }
  return "";
}

std::string_view DenominatorName(Denominator d) {
  return d == Denominator::kAll ? "all" : "defined";
}

std::string SweepToJson(const SweepCurve& curve) {
  Json j;
  j["measure"] = std::string(MeasureName(curve.measure));
  j["n"] = curve.n;
  j["vary"] = std::string(AxisName(curve.axis));
  j["fixed"] = Ratio(curve.fixed);
  j["statistic"] = std::string(StatisticName(curve.statistic));
  j["denominator"] = std::string(DenominatorName(curve.denominator));
  Json points = Json::array();
  for (const auto& p : curve.points) {
    points.push_back(Json{{"ratio", Ratio(p.ratio)},
                          {"p", p.stratum.p()},
                          {"n_p", p.stratum.n_p()},
                          {"value", Ratio(p.value)}});
  }
  j["points"] = std::move(points);
  return Dump(j);
}

std::string SweepToCsv(const SweepCurve& curve) {
  std::string out = "ratio_num,ratio_den,p,n_p,value_num,value_den\n";
  for (const auto& p : curve.points) {
    out += std::to_string(p.ratio.num()) + "," + std::to_string(p.ratio.den()) +
           "," + std::to_string(p.stratum.p()) + "," +
           std::to_string(p.stratum.n_p()) + "," +
           std::to_string(p.value.num()) + "," +
           std::to_string(p.value.den()) + "\n";
  }
  return out;
}

CurveData ParseCurve(std::string_view text) {
  CurveData out;
  if (LooksLikeJson(text)) {
    Json j = Parse(text);
    const Json& points = Require(j, "points");
    if (!points.is_array()) SchemaError("field 'points' is not an array");
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::string at = "points[" + std::to_string(i) + "].";
      const Json& p = points[i];
      if (!p.is_object() || !p.contains("ratio")) SchemaError("missing field '" + at + "ratio'");
      if (!p.contains("value")) SchemaError("missing field '" + at + "value'");
      if (!p["ratio"].is_string() || !p["value"].is_string()) {
        SchemaError("field '" + at + "ratio/value' is not a ratio string");
      }
      out.points.emplace_back(
          Rational::Parse(p["ratio"].get<std::string>()).ToDouble(),
          Rational::Parse(p["value"].get<std::string>()).ToDouble());
    }
    std::string vary = j.contains("vary") ? StringField(j, "vary") : "ratio";
    std::string stat = j.contains("statistic") ? StringField(j, "statistic") : "value";
    std::string measure = j.contains("measure") ? StringField(j, "measure") : "";
    out.label = measure + " " + stat + " vs " + vary;
  } else {
    auto rows = CsvRows(text);
    ExpectHeader(rows,
                 {"ratio_num", "ratio_den", "p", "n_p", "value_num", "value_den"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& r = rows[i];
      std::string at = "row " + std::to_string(i + 1);
      if (r.size() != 6) SchemaError(at + " does not have 6 fields");
      Rational x(ParseInt(r[0], at + " ratio_num"), ParseInt(r[1], at + " ratio_den"));
      Rational y(ParseInt(r[4], at + " value_num"), ParseInt(r[5], at + " value_den"));
      out.points.emplace_back(x.ToDouble(), y.ToDouble());
    }
    out.label = "sweep";
  }
  if (out.points.empty()) SchemaError("curve has no points");
  return out;
}

std::string HeatmapToJson(const Heatmap& h) {
  Json j;
  j["measure"] = std::string(MeasureName(h.measure));
  j["performance"] = std::string(PerformanceName(h.performance));
  j["n"] = h.n;
  if (h.stratum) {
    j["p"] = h.stratum->p();
    j["n_p"] = h.stratum->n_p();
  }
  j["fairness_bins"] = h.fairness_bins;
  j["performance_bins"] = h.performance_bins;
  j["total"] = CountToJson(h.total);
  Json rows = Json::array();
  for (int f = 0; f < h.fairness_bins; ++f) {
    Json row = Json::array();
    for (int p = 0; p < h.performance_bins; ++p) {
      row.push_back(CountToJson(h.cell(f, p)));
    }
    rows.push_back(std::move(row));
  }
  j["cells"] = std::move(rows);
  j["fairness_undefined"] = CountArray(h.fairness_undefined);
  j["performance_undefined"] = CountArray(h.performance_undefined);
  j["both_undefined"] = CountToJson(h.both_undefined);
  return Dump(j);
}

std::string HeatmapToCsv(const Heatmap& h) {
  std::string out = "fairness_bin,perf_bin,count\n";
  for (int f = 0; f < h.fairness_bins; ++f) {
    for (int p = 0; p < h.performance_bins; ++p) {
      out += std::to_string(f) + "," + std::to_string(p) + "," +
             h.cell(f, p).ToString() + "\n";
    }
  }
  for (int p = 0; p < h.performance_bins; ++p) {
    out += "UNDEFINED," + std::to_string(p) + "," +
           h.fairness_undefined[static_cast<std::size_t>(p)].ToString() + "\n";
  }
  for (int f = 0; f < h.fairness_bins; ++f) {
    out += std::to_string(f) + ",UNDEFINED," +
           h.performance_undefined[static_cast<std::size_t>(f)].ToString() +
           "\n";
  }
  out += "UNDEFINED,UNDEFINED," + h.both_undefined.ToString() + "\n";
  return out;
}

HeatmapData ParseHeatmap(std::string_view text) {
  HeatmapData out;
  if (LooksLikeJson(text)) {
    Json j = Parse(text);
    out.fairness_bins = static_cast<int>(IntField(j, "fairness_bins"));
    out.performance_bins = static_cast<int>(IntField(j, "performance_bins"));
    if (out.fairness_bins <= 0 || out.performance_bins <= 0) {
      SchemaError("bin counts must be positive");
    }
    const Json& rows = Require(j, "cells");
    if (!rows.is_array() ||
        rows.size() != static_cast<std::size_t>(out.fairness_bins)) {
      SchemaError("field 'cells' does not have fairness_bins rows");
    }
    for (std::size_t f = 0; f < rows.size(); ++f) {
      if (!rows[f].is_array() ||
          rows[f].size() != static_cast<std::size_t>(out.performance_bins)) {
        SchemaError("field 'cells[" + std::to_string(f) +
                    "]' does not have performance_bins entries");
      }
      for (std::size_t p = 0; p < rows[f].size(); ++p) {
        out.cells.push_back(CountFromJson(
            rows[f][p],
            "cells[" + std::to_string(f) + "][" + std::to_string(p) + "]"));
      }
    }
    out.label = (j.contains("measure") ? StringField(j, "measure") : "") +
                " vs " +
                (j.contains("performance") ? StringField(j, "performance") : "");
    return out;
  }
  auto rows = CsvRows(text);
  ExpectHeader(rows, {"fairness_bin", "perf_bin", "count"});
  std::vector<std::tuple<int, int, Count>> cells;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::string at = "row " + std::to_string(i + 1);
    if (r.size() != 3) SchemaError(at + " does not have 3 fields");
    if (r[0] == "UNDEFINED" || r[1] == "UNDEFINED") continue;
    int f = static_cast<int>(ParseInt(r[0], at + " fairness_bin"));
    int p = static_cast<int>(ParseInt(r[1], at + " perf_bin"));
    if (f < 0 || p < 0) SchemaError(at + " has a negative bin index");
    cells.emplace_back(f, p, Count::Parse(r[2]));
    out.fairness_bins = std::max(out.fairness_bins, f + 1);
    out.performance_bins = std::max(out.performance_bins, p + 1);
  }
  if (cells.empty()) SchemaError("heatmap has no cells");
  out.cells.assign(
      static_cast<std::size_t>(out.fairness_bins) * out.performance_bins,
      Count());
  for (const auto& [f, p, c] : cells) {
    out.cells[static_cast<std::size_t>(f) * out.performance_bins + p] += c;
  }
  out.label = "heatmap";
  return out;
}

std::string ReportToJson(const PropertyReport& report) {
  Json j;
  j["n"] = report.grid.n;
  j["ir_grid"] = RatioArray(report.grid.ir);
  j["gr_grid"] = RatioArray(report.grid.gr);
  j["config"] = Json{
      {"immunity_tv", Ratio(report.thresholds.immunity_tv)},
      {"resolution_ratio", Ratio(report.thresholds.resolution_ratio)},
      {"perfect_fairness_ratio",
       Ratio(report.thresholds.perfect_fairness_ratio)},
      {"undefined_trend_ratio", Ratio(report.thresholds.undefined_trend_ratio)},
  };
  Json cells = Json::array();
  for (const auto& c : report.cells) {
    Json cell;
    cell["measure"] = std::string(MeasureName(c.measure));
    cell["property"] = std::string(PropertyName(c.property));
    cell["statistic"] = c.statistic ? Json(Ratio(*c.statistic)) : Json("inf");
    cell["threshold"] = c.threshold ? Json(Ratio(*c.threshold)) : Json(nullptr);
    cell["verdict"] = std::string(VerdictName(c.verdict));
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses) witnesses.push_back(PointJson(w));
    cell["witnesses"] = std::move(witnesses);
    if (c.defined_only_statistic) {
      cell["defined_only_statistic"] = Ratio(*c.defined_only_statistic);
    }
    if (c.property == PropertyId::kUndefinedValues) {
      cell["condition"] = c.condition;
      Json probs = Json::array();
      for (const auto& [p, u] : c.undefined_probabilities) {
        Json e = PointJson(p);
        e["probability"] = Ratio(u);
        probs.push_back(std::move(e));
      }
      cell["undefined_probabilities"] = std::move(probs);
    }
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  return Dump(j);
}

std::string ReportToTable(const PropertyReport& report) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {""};
  for (MeasureId m : kAllMeasures) header.emplace_back(MeasureAbbrev(m));
  rows.push_back(header);
  bool caveat = false;
  for (PropertyId p : kAllProperties) {
    std::vector<std::string> row = {std::string(PropertyTitle(p))};
    for (MeasureId m : kAllMeasures) {
      const auto& c = report.Cell(p, m);
      switch (c.verdict) {
        case Verdict::kHolds:
          row.emplace_back("✓");
          break;
        case Verdict::kFails:
          row.emplace_back("×");
          break;
        case Verdict::kHoldsWithCaveat:
          row.emplace_back("✓†");
          caveat = true;
          break;
        case Verdict::kReported:
          row.push_back(c.condition);
          break;
      }
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], DisplayWidth(row[i]));
    }
  }
  std::string out = "n=" + std::to_string(report.grid.n) + "  IR grid {";
  for (std::size_t i = 0; i < report.grid.ir.size(); ++i) {
    out += (i ? ", " : "") + Ratio(report.grid.ir[i]);
  }
  out += "}  GR grid {";
  for (std::size_t i = 0; i < report.grid.gr.size(); ++i) {
    out += (i ? ", " : "") + Ratio(report.grid.gr[i]);
  }
  out += "}\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += Pad(row[i], widths[i]) + (i + 1 < row.size() ? "  " : "");
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  if (caveat) {
    out += "† holds only after renormalizing over defined values; "
           "extreme group ratios add undefined mass\n";
  }
  return out;
}

std::vector<Rational> ParseRatioList(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) Fail(ErrorCode::kInvalidArgument, "empty ratio in list");
    out.push_back(Rational::Parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace fairdist
