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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fairdist/fairdist.h"

namespace {

class CApiTest : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(fd_context_new(2, &ctx_), FD_OK); }
  void TearDown() override { fd_context_free(ctx_); }

  std::string Take(fd_text* t) {
    std::string s(fd_text_data(t), fd_text_size(t));
    fd_text_free(t);
    return s;
  }

  fd_context* ctx_ = nullptr;
};

TEST_F(CApiTest, Counts) {
  fd_text* t = nullptr;
  ASSERT_EQ(fd_total_count(ctx_, 56, &t), FD_OK);
  EXPECT_EQ(Take(t), "553270671");
  ASSERT_EQ(fd_stratum_count(ctx_, 8, 4, 4, &t), FD_OK);
  EXPECT_EQ(Take(t), "259");
  EXPECT_EQ(fd_total_count(ctx_, 1000000000, &t), FD_ERR_OVERFLOW);
  EXPECT_NE(std::string(fd_last_error(ctx_)), "");
}

TEST_F(CApiTest, RatiosAndErrors) {
  int64_t p = 0, n_p = 0;
  ASSERT_EQ(fd_stratum_from_ratios(ctx_, 56, "1/28", "0.5", &p, &n_p), FD_OK);
  EXPECT_EQ(p, 2);
  EXPECT_EQ(n_p, 28);
  EXPECT_EQ(std::string(fd_last_error(ctx_)), "");
  EXPECT_EQ(fd_stratum_from_ratios(ctx_, 10, "1/3", "1/2", &p, &n_p),
            FD_ERR_INEXACT_RATIO);
  EXPECT_NE(std::string(fd_last_error(ctx_)).find("IR"), std::string::npos);
  EXPECT_EQ(fd_stratum_from_ratios(ctx_, 10, "x", "1/2", &p, &n_p), FD_ERR_USAGE);
  fd_measure m;
  EXPECT_EQ(fd_measure_parse(ctx_, "nope", &m), FD_ERR_USAGE);
  ASSERT_EQ(fd_measure_parse(ctx_, "negative-predictive-parity", &m), FD_OK);
  EXPECT_EQ(m, FD_NEGATIVE_PREDICTIVE_PARITY);
  EXPECT_STREQ(fd_measure_name(FD_STATISTICAL_PARITY), "statistical-parity");
  EXPECT_EQ(fd_total_count(nullptr, 3, nullptr), FD_ERR_USAGE);
}

TEST_F(CApiTest, PmfAccessors) {
  fd_pmf* pmf = nullptr;
  ASSERT_EQ(fd_pmf_compute(ctx_, FD_EQUAL_OPPORTUNITY, 4, 2, 2, 0, &pmf), FD_OK);
  uint64_t total = 0, undefined = 0;
  ASSERT_EQ(fd_pmf_total(ctx_, pmf, &total), FD_OK);
  ASSERT_EQ(fd_pmf_undefined(ctx_, pmf, &undefined), FD_OK);
  EXPECT_EQ(total, 34u);
  EXPECT_EQ(undefined, 18u);
  ASSERT_EQ(fd_pmf_unique_values(pmf), 3u);
  int64_t num = 0, den = 0;
  uint64_t count = 0;
  ASSERT_EQ(fd_pmf_entry(ctx_, pmf, 1, &num, &den, &count), FD_OK);
  EXPECT_EQ(num, 0);
  EXPECT_EQ(den, 1);
  EXPECT_EQ(count, 8u);
  EXPECT_EQ(fd_pmf_entry(ctx_, pmf, 3, &num, &den, &count), FD_ERR_USAGE);
  ASSERT_EQ(fd_pmf_perfect_fairness(ctx_, pmf, FD_DENOM_ALL, &num, &den), FD_OK);
  EXPECT_EQ(num, 4);
  EXPECT_EQ(den, 17);
  ASSERT_EQ(fd_pmf_undefined_probability(ctx_, pmf, &num, &den), FD_OK);
  EXPECT_EQ(num, 9);
  EXPECT_EQ(den, 17);

  fd_pmf* brute = nullptr;
  ASSERT_EQ(fd_pmf_compute(ctx_, FD_EQUAL_OPPORTUNITY, 4, 2, 2, 1, &brute), FD_OK);
  EXPECT_TRUE(fd_pmf_equal(pmf, brute));
  fd_pmf_free(brute);
  fd_pmf_free(pmf);
}

TEST_F(CApiTest, ExportParseHistogramRoundTrip) {
  fd_pmf* pmf = nullptr;
  ASSERT_EQ(fd_pmf_compute(ctx_, FD_POSITIVE_PREDICTIVE_PARITY, 12, 3, 5, 0, &pmf),
            FD_OK);
  fd_text* t = nullptr;
  ASSERT_EQ(fd_pmf_export(ctx_, pmf, FD_FORMAT_JSON, &t), FD_OK);
  std::string json = Take(t);
  fd_pmf* parsed = nullptr;
  ASSERT_EQ(fd_pmf_parse(ctx_, json.data(), json.size(), &parsed), FD_OK);
  EXPECT_TRUE(fd_pmf_equal(pmf, parsed));
  std::vector<uint64_t> a(41), b(41);
  uint64_t ua = 0, ub = 0;
  ASSERT_EQ(fd_pmf_histogram(ctx_, pmf, 41, a.data(), &ua), FD_OK);
  ASSERT_EQ(fd_pmf_histogram(ctx_, parsed, 41, b.data(), &ub), FD_OK);
  EXPECT_EQ(a, b);
  EXPECT_EQ(ua, ub);
  EXPECT_EQ(fd_pmf_histogram(ctx_, pmf, 40, a.data(), &ua), FD_ERR_USAGE);
  fd_pmf_free(parsed);
  fd_pmf_free(pmf);
  EXPECT_EQ(fd_pmf_parse(ctx_, "{}", 2, &parsed), FD_ERR_USAGE);
}

TEST_F(CApiTest, SweepHeatmapReport) {
  fd_text* t = nullptr;
  ASSERT_EQ(fd_sweep(ctx_, FD_EQUAL_OPPORTUNITY, 56, FD_AXIS_IR, "1/28,1/2",
                     "1/2", FD_STAT_PERFECT_FAIRNESS, FD_DENOM_ALL,
                     FD_FORMAT_CSV, &t),
            FD_OK);
  EXPECT_EQ(Take(t).rfind("ratio_num,ratio_den", 0), 0u);
  EXPECT_EQ(fd_sweep(ctx_, FD_EQUAL_OPPORTUNITY, 56, FD_AXIS_IR, "1/3", "1/2",
                     FD_STAT_PERFECT_FAIRNESS, FD_DENOM_ALL, FD_FORMAT_CSV, &t),
            FD_ERR_INEXACT_RATIO);

  fd_heatmap* h = nullptr;
  ASSERT_EQ(fd_heatmap_compute(ctx_, FD_ACCURACY_EQUALITY, FD_PERF_GMEAN, 1,
                               nullptr, nullptr, 41, 20, &h),
            FD_OK);
  ASSERT_EQ(fd_heatmap_export(ctx_, h, FD_FORMAT_CSV, &t), FD_OK);
  EXPECT_NE(Take(t).find("UNDEFINED,UNDEFINED,"), std::string::npos);
  fd_heatmap_free(h);
  EXPECT_EQ(fd_heatmap_compute(ctx_, FD_ACCURACY_EQUALITY, FD_PERF_GMEAN, 8,
                               "1/2", nullptr, 41, 20, &h),
            FD_ERR_USAGE);

  fd_report* r = nullptr;
  fd_thresholds th{nullptr, nullptr, nullptr, nullptr};
  ASSERT_EQ(fd_report_compute(ctx_, 12, "1/4,1/2,3/4", "1/4,1/2,3/4", &th, &r),
            FD_OK);
  fd_verdict v;
  ASSERT_EQ(fd_report_verdict(ctx_, r, 3, FD_POSITIVE_PREDICTIVE_PARITY, &v), FD_OK);
  EXPECT_EQ(v, FD_FAILS);
  ASSERT_EQ(fd_report_export(ctx_, r, FD_FORMAT_TABLE, &t), FD_OK);
  EXPECT_NE(Take(t).find("Fairness Symmetry"), std::string::npos);
  EXPECT_EQ(fd_report_export(ctx_, r, FD_FORMAT_CSV, &t), FD_ERR_USAGE);
  fd_report_free(r);
}

TEST_F(CApiTest, BatchAndSvg) {
  std::string input = "{\"counts\": [2,0,0,2,1,1,1,1]}\n";
  fd_text* t = nullptr;
  ASSERT_EQ(fd_measure_batch(ctx_, input.data(), input.size(), &t), FD_OK);
  EXPECT_NE(Take(t).find("\"predictive-equality\":\"-1/2\""), std::string::npos);
  std::string bad = "{\"counts\": [1]}\n";
  EXPECT_EQ(fd_measure_batch(ctx_, bad.data(), bad.size(), &t), FD_ERR_USAGE);

  std::string csv = "value_num,value_den,count\n0,1,8\nUNDEFINED,,0\n";
  ASSERT_EQ(fd_render_svg(ctx_, csv.data(), csv.size(), FD_PLOT_HISTOGRAM, 41, &t),
            FD_OK);
  EXPECT_EQ(Take(t).rfind("<?xml", 0), 0u);
}

}  // namespace
