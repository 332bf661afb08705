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

#include <sstream>

#include <gtest/gtest.h>

#include "batch.h"
#include "distribution.h"
#include "error.h"
#include "json.hpp"
#include "serialize.h"
#include "svg.h"

namespace fairdist {
namespace {

std::size_t Occurrences(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos;
       pos = s.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(PmfExportTest, JsonSchema) {
  Stratum s(4, 2, 2);
  Pmf pmf = StratumPmfFast(MeasureId::kEqualOpportunity, s);
  auto j = nlohmann::json::parse(PmfToJson(MeasureId::kEqualOpportunity, s, pmf));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["n_p"], 2);
  EXPECT_EQ(j["measure"], "equal-opportunity");
  EXPECT_EQ(j["total"], 34);
  EXPECT_EQ(j["undefined_count"], 18);
  ASSERT_EQ(j["entries"].size(), 3u);
  EXPECT_EQ(j["entries"][0]["num"], -1);
  EXPECT_EQ(j["entries"][1]["count"], 8);
}

TEST(PmfExportTest, RoundTrips) {
  Stratum s(9, 4, 3);
  for (MeasureId m : kAllMeasures) {
    Pmf pmf = StratumPmfFast(m, s);
    LabeledPmf json = ParsePmf(PmfToJson(m, s, pmf));
    EXPECT_EQ(json.pmf, pmf);
    EXPECT_EQ(json.measure, m);
    EXPECT_EQ(json.stratum, s);
    LabeledPmf csv = ParsePmf(PmfToCsv(pmf));
    EXPECT_EQ(csv.pmf, pmf);
    EXPECT_FALSE(csv.measure);
  }
}

TEST(PmfExportTest, ErrorsNameTheField) {
  auto message = [](std::string_view text) {
    try {
      ParsePmf(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"total": 1, "undefined_count": 1})").find("entries"),
            std::string::npos);
  EXPECT_NE(message(R"({"total": 2, "undefined_count": 1, "entries": [{"num": 0, "den": 1}]})")
                .find("entries[0].count"),
            std::string::npos);
  EXPECT_NE(message("").find("empty"), std::string::npos);
  EXPECT_NE(message("a,b,c\n").find("header"), std::string::npos);
  EXPECT_NE(message(R"({"total": 5, "undefined_count": 1, "entries": []})"),
            "no error");
}

TEST(SweepExportTest, Schemas) {
  std::vector<Rational> grid = {Rational(1, 4), Rational(1, 2)};
  SweepCurve c = Sweep(MeasureId::kEqualOpportunity, 8,
                       SweepAxis::kImbalanceRatio, grid, Rational(1, 2),
                       SweepStatistic::kPerfectFairness);
  auto j = nlohmann::json::parse(SweepToJson(c));
  EXPECT_EQ(j["vary"], "ir");
  EXPECT_EQ(j["fixed"], "1/2");
  EXPECT_EQ(j["statistic"], "perfect-fairness");
  EXPECT_EQ(j["denominator"], "all");
  ASSERT_EQ(j["points"].size(), 2u);
  EXPECT_EQ(j["points"][0]["ratio"], "1/4");
  EXPECT_EQ(j["points"][0]["p"], 2);
  CurveData fromJson = ParseCurve(SweepToJson(c));
  CurveData fromCsv = ParseCurve(SweepToCsv(c));
  EXPECT_EQ(fromJson.points, fromCsv.points);
  EXPECT_DOUBLE_EQ(fromJson.points[1].second, c.points[1].value.ToDouble());
}

TEST(HeatmapExportTest, RoundTrips) {
  Heatmap h = JointHeatmap(MeasureId::kPredictiveEquality,
                           PerformanceMeasure::kAccuracy, 4, 5, 4);
  HeatmapData json = ParseHeatmap(HeatmapToJson(h));
  HeatmapData csv = ParseHeatmap(HeatmapToCsv(h));
  EXPECT_EQ(json.cells, h.cells);
  EXPECT_EQ(csv.cells, h.cells);
  EXPECT_EQ(csv.fairness_bins, 5);
  EXPECT_EQ(csv.performance_bins, 4);
}

TEST(BatchTest, ScoresRecordsInOrder) {
  std::istringstream in(
      "{\"id\": 7, \"counts\": [2,0,0,2,1,1,1,1]}\n"
      "\n"
      "{\"tp_p\":1,\"fn_p\":0,\"fp_p\":0,\"tn_p\":0,"
      "\"tp_up\":0,\"fn_up\":0,\"fp_up\":0,\"tn_up\":1}\n"
      "{\"counts\": [1,1,1,1,1,1,1,1]}\n");
  std::ostringstream out;
  ScoreBatch(in, out);
  std::istringstream lines(out.str());
  std::string line;
  std::vector<nlohmann::json> records;
  while (std::getline(lines, line)) records.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0]["id"], 7);
  EXPECT_EQ(records[0]["statistical-parity"], "0/1");
  EXPECT_EQ(records[0]["predictive-equality"], "-1/2");
  EXPECT_EQ(records[1]["index"], 1);
  EXPECT_EQ(records[1]["equal-opportunity"], "undefined");
  for (MeasureId m : kAllMeasures) {
    EXPECT_EQ(records[2][std::string(MeasureName(m))], "0/1");
  }
}

TEST(BatchTest, MalformedRecordNamesIndex) {
  for (const char* bad : {"{\"counts\": [1,2,3]}", "{\"counts\": [1,2,3,4,5,6,7,-8]}",
                          "not json", "{\"tp_p\": 1}"}) {
    std::istringstream in(std::string("{\"counts\": [0,0,0,1,0,0,0,1]}\n") + bad);
    std::ostringstream out;
    try {
      ScoreBatch(in, out);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
      EXPECT_NE(std::string(e.what()).find("record 1"), std::string::npos) << e.what();
    }
  }
}

TEST(SvgTest, HistogramBars) {
  Pmf single;
  single.Add(Rational(0, 1), Count(8));
  std::string svg = RenderSvg(PmfToCsv(single), PlotKind::kHistogram);
  EXPECT_EQ(Occurrences(svg, "class=\"bar\""), 1u);
  EXPECT_EQ(Occurrences(svg, "class=\"undefined\""), 0u);
  EXPECT_NE(svg.find("viewBox=\"0 0 800 600\""), std::string::npos);

  Stratum s(4, 2, 2);
  Pmf eo = StratumPmfFast(MeasureId::kEqualOpportunity, s);
  std::string with_undefined =
      RenderSvg(PmfToJson(MeasureId::kEqualOpportunity, s, eo), PlotKind::kHistogram);
  EXPECT_EQ(Occurrences(with_undefined, "class=\"bar\""), 3u);
  EXPECT_EQ(Occurrences(with_undefined, "class=\"undefined\""), 1u);
  EXPECT_NE(with_undefined.find("#d62728"), std::string::npos);
}

TEST(SvgTest, EmptyPmfIsRejected) {
  EXPECT_THROW(RenderSvg("", PlotKind::kHistogram), Error);
  EXPECT_THROW(RenderSvg("value_num,value_den,count\nUNDEFINED,,0\n",
                         PlotKind::kHistogram),
               Error);
}

TEST(SvgTest, HeatmapHasOneCellPerBinPair) {
  Heatmap h = JointHeatmap(MeasureId::kAccuracyEquality,
                           PerformanceMeasure::kGMean, 3, 7, 5);
  std::string svg = RenderSvg(HeatmapToCsv(h), PlotKind::kHeatmap);
  EXPECT_EQ(Occurrences(svg, "class=\"cell\""), 35u);
}

TEST(SvgTest, CurveIsDeterministic) {
  std::vector<Rational> grid = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  SweepCurve c = Sweep(MeasureId::kAccuracyEquality, 8, SweepAxis::kGroupRatio,
                       grid, Rational(1, 2), SweepStatistic::kPerfectFairness);
  std::string a = RenderSvg(SweepToJson(c), PlotKind::kCurve);
  EXPECT_EQ(a, RenderSvg(SweepToJson(c), PlotKind::kCurve));
  EXPECT_EQ(Occurrences(a, "<polyline"), 1u);
  EXPECT_EQ(Occurrences(a, "class=\"point\""), 3u);
}

}  // namespace
}  // namespace fairdist
