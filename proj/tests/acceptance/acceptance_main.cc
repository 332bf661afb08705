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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// Usage: fairdist_acceptance --cli <path to the fairdist binary>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "distribution.h"
#include "enumeration.h"
#include "properties.h"
#include "serialize.h"

namespace fairdist {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

const std::vector<Rational>& StandardAxis() {
  static const std::vector<Rational> axis = {Rational(1, 28), Rational(1, 4),
                                             Rational(1, 2), Rational(3, 4),
                                             Rational(27, 28)};
  return axis;
}

template <typename Fn>
void ForAllStrata(std::int64_t n, Fn&& fn) {
  for (std::int64_t p = 0; p <= n; ++p) {
    for (std::int64_t n_p = 0; n_p <= n; ++n_p) fn(Stratum(n, p, n_p));
  }
}

Outcome TotalCountCriterion() {
  auto start = Clock::now();
  Count c = TotalCount(56);
  double ms = Seconds(start) * 1e3;
  bool ok = c == Count(553270671) && ms < 1.0;
  return {ok, "total_count(56)=" + c.ToString() + " in " + Fixed(ms, 4) + " ms"};
}

Outcome PartitionCriterion() {
  auto start = Clock::now();
  std::int64_t bad = -1;
  for (std::int64_t n = 1; n <= 32 && bad < 0; ++n) {
    Count sum;
    ForAllStrata(n, [&](const Stratum& s) { sum += StratumCount(s); });
    if (sum != TotalCount(n)) bad = n;
  }
  double secs = Seconds(start);
  if (bad >= 0) return {false, "sum differs from total at n=" + std::to_string(bad)};
  return {secs < 10, "n=1..32 exact in " + Fixed(secs) + " s"};
}

Outcome OracleCriterion(const Executor& exec) {
  auto start = Clock::now();
  std::size_t compared = 0;
  for (std::int64_t n : {2, 4, 8, 12}) {
    bool failed = false;
    std::string where;
    ForAllStrata(n, [&](const Stratum& s) {
      for (MeasureId m : kAllMeasures) {
        if (failed) return;
        if (StratumPmfFast(m, s, exec) != StratumPmfBruteForce(m, s, exec)) {
          failed = true;
          where = std::string(MeasureName(m)) + " " + s.ToString();
        }
        ++compared;
      }
    });
    if (failed) return {false, "mismatch at " + where};
  }
  double secs = Seconds(start);
  return {secs < 300, std::to_string(compared) + " (measure, stratum) pmfs equal in " +
                          Fixed(secs) + " s"};
}

Outcome AeSpIdentityCriterion(const Executor& exec) {
  std::size_t checked = 0;
  for (std::int64_t n = 1; n <= 12; ++n) {
    bool ok = true;
    ForAllStrata(n, [&](const Stratum& s) {
      ok = ok && StratumPmfFast(MeasureId::kAccuracyEquality, s, exec) ==
                     StratumPmfFast(MeasureId::kStatisticalParity, s, exec);
      ++checked;
    });
    if (!ok) return {false, "differs at n=" + std::to_string(n)};
  }
  for (const auto& ir : StandardAxis()) {
    for (const auto& gr : StandardAxis()) {
      Stratum s = Stratum::FromRatios(56, ir, gr);
      if (StratumPmfFast(MeasureId::kAccuracyEquality, s, exec) !=
          StratumPmfFast(MeasureId::kStatisticalParity, s, exec)) {
        return {false, "differs at " + s.ToString()};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " strata identical"};
}

Outcome ClassSwapCriterion(const Executor& exec) {
  std::size_t checked = 0;
  for (std::int64_t n = 1; n <= 12; ++n) {
    std::string where;
    ForAllStrata(n, [&](const Stratum& s) {
      Stratum dual(s.n(), s.negatives(), s.n_p());
      if (StratumPmfFast(MeasureId::kPredictiveEquality, s, exec) !=
              StratumPmfFast(MeasureId::kEqualOpportunity, dual, exec) ||
          StratumPmfFast(MeasureId::kNegativePredictiveParity, s, exec) !=
              StratumPmfFast(MeasureId::kPositivePredictiveParity, dual, exec)) {
        if (where.empty()) where = s.ToString();
      }
      ++checked;
    });
    if (!where.empty()) return {false, "differs at " + where};
  }
  return {true, std::to_string(checked) + " strata, PE=EO and NPP=PPP duals"};
}

Outcome UndefinedCriterion(const Executor& exec) {
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (std::int64_t p = 0; p <= n; ++p) {
      for (std::int64_t n_p = 1; n_p < n; ++n_p) {
        Stratum s(n, p, n_p);
        for (MeasureId m :
             {MeasureId::kAccuracyEquality, MeasureId::kStatisticalParity}) {
          if (!UndefinedProbability(StratumPmfFast(m, s, exec)).is_zero()) {
            return {false, "AE/SP undefined mass at " + s.ToString()};
          }
        }
      }
    }
  }
  std::vector<Rational> probs;
  std::string detail = "AE/SP zero for n<=12; EO undefined at IR 1/2,1/4,1/28:";
  for (const Rational& ir : {Rational(1, 2), Rational(1, 4), Rational(1, 28)}) {
    Stratum s = Stratum::FromRatios(56, ir, Rational(1, 2));
    probs.push_back(
        UndefinedProbability(StratumPmfFast(MeasureId::kEqualOpportunity, s, exec)));
    detail += " " + Fixed(probs.back().ToDouble(), 4);
  }
  bool increasing = probs[0] < probs[1] && probs[1] < probs[2];
  return {increasing, detail};
}

Outcome PerfectFairnessCriterion(const Executor& exec) {
  auto pf = [&](MeasureId m, const Rational& ir, const Rational& gr) {
    return PerfectFairnessProbability(
        StratumPmfFast(m, Stratum::FromRatios(56, ir, gr), exec));
  };
  const Rational half(1, 2);
  Rational eo_low = pf(MeasureId::kEqualOpportunity, Rational(1, 28), half);
  Rational eo_mid = pf(MeasureId::kEqualOpportunity, half, half);
  Rational pe_high = pf(MeasureId::kPredictiveEquality, Rational(27, 28), half);
  Rational pe_mid = pf(MeasureId::kPredictiveEquality, half, half);
  bool ok = eo_low > eo_mid && pe_high > pe_mid;
  std::string detail = "EO " + Fixed(eo_low.ToDouble(), 4) + " > " +
                       Fixed(eo_mid.ToDouble(), 4) + ", PE " +
                       Fixed(pe_high.ToDouble(), 4) + " > " +
                       Fixed(pe_mid.ToDouble(), 4);
  for (MeasureId m : {MeasureId::kAccuracyEquality, MeasureId::kStatisticalParity}) {
    Rational lo(1, 1), hi(0, 1);
    for (const auto& ir : StandardAxis()) {
      for (const auto& gr : StandardAxis()) {
        Rational v = pf(m, ir, gr);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    double factor = hi.ToDouble() / lo.ToDouble();
    ok = ok && hi <= Rational(2, 1) * lo;
    detail += ", " + std::string(MeasureName(m)) + " max/min " + Fixed(factor) +
              " (limit 2)";
  }
  return {ok, detail};
}

// Expected verdict matrix. Rows follow kAllProperties, columns kAllMeasures.
// Cells of the undefined-values row hold the expected condition text.
const std::vector<std::vector<std::string>>& ExpectedPattern() {
  static const std::vector<std::vector<std::string>> rows = {
      {"x", "x", "x", "x", "x", "x"},
      {"x", "x", "v+", "v+", "x", "x"},
      {"v", "v", "x", "x", "x", "x"},
      {"v", "v", "v", "v", "x", "x"},
      {"v", "v", "x", "x", "x", "x"},
      {"v", "v", "v", "v", "x", "x"},
      {"v", "v", "x", "x", "x", "x"},
      {"when n_p=0 or n_up=0", "when n_p=0 or n_up=0", "low/high GR, low IR",
       "low/high GR, high IR", "low/high GR", "low/high GR"},
  };
  return rows;
}

std::string Symbol(const PropertyVerdict& v) {
  switch (v.verdict) {
    case Verdict::kHolds:
      return "v";
    case Verdict::kFails:
      return "x";
    case Verdict::kHoldsWithCaveat:
      return "v+";
    case Verdict::kReported:
      return v.condition;
  }
  return "?";
}

Outcome PropertyReportCriterion(const Executor& exec) {
  std::vector<Rational> axis = {Rational(1, 12), Rational(1, 4), Rational(1, 2),
                                Rational(3, 4), Rational(11, 12)};
  auto start = Clock::now();
  PropertyReport report =
      BuildPropertyReport(RatioGrid::Make(24, axis, axis), PropertyThresholds{}, exec);
  double secs = Seconds(start);
  int matched = 0;
  std::string mismatches;
  for (std::size_t p = 0; p < kAllProperties.size(); ++p) {
    for (std::size_t m = 0; m < kAllMeasures.size(); ++m) {
      const auto& cell = report.Cell(kAllProperties[p], kAllMeasures[m]);
      std::string got = Symbol(cell);
      const std::string& want = ExpectedPattern()[p][m];
      if (got == want) {
        ++matched;
        continue;
      }
      mismatches += "; " + std::string(PropertyName(cell.property)) + "/" +
                    std::string(MeasureName(cell.measure)) + " got " + got +
                    " want " + want;
      if (cell.statistic) mismatches += " (stat " + Fixed(cell.statistic->ToDouble()) + ")";
      if (cell.defined_only_statistic) {
        mismatches +=
            " (defined-only " + Fixed(cell.defined_only_statistic->ToDouble()) + ")";
      }
    }
  }
  return {matched == 48 && secs < 600,
          std::to_string(matched) + "/48 cells match in " + Fixed(secs) + " s" +
              mismatches};
}

Outcome PerformanceCriterion(const Executor& exec) {
  auto start = Clock::now();
  for (MeasureId m : kAllMeasures) {
    for (const auto& ir : StandardAxis()) {
      for (const auto& gr : StandardAxis()) {
        StratumPmfFast(m, Stratum::FromRatios(56, ir, gr), exec);
      }
    }
  }
  double secs = Seconds(start);
  return {secs < 300, "150 pmfs at n=56 in " + Fixed(secs) + " s with " +
                          std::to_string(exec.threads()) + " thread(s)"};
}

struct CommandResult {
  int status;
  std::string out;
};

CommandResult RunCommand(const std::string& cmd) {
  CommandResult r{-1, {}};
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Outcome DeterminismCriterion(const std::string& cli) {
  if (cli.empty()) return {false, "no --cli binary given"};
  const std::vector<std::string> commands = {
      "pmf --n 56 --ir 1/4 --gr 1/28 --measure positive-predictive-parity",
      "pmf --n 56 --ir 1/2 --gr 1/2 --measure equal-opportunity --format csv",
      "sweep --n 56 --vary ir --grid 1/28,1/4,1/2,3/4,27/28 --gr 1/2 "
      "--measure predictive-equality",
      "sweep --n 56 --vary gr --grid 1/28,1/4,1/2,3/4,27/28 --ir 1/2 "
      "--statistic undefined --format csv",
      "properties --n 24 --grid 1/12,1/4,1/2,3/4,11/12",
      "properties --n 24 --grid 1/12,1/4,1/2,3/4,11/12 --format table",
  };
  for (const auto& args : commands) {
    CommandResult one = RunCommand(cli + " " + args + " --threads 1");
    CommandResult many = RunCommand(cli + " " + args + " --threads 8");
    if (one.status != 0 || many.status != 0) {
      return {false, "command failed: " + args};
    }
    if (one.out != many.out) return {false, "output differs: " + args};
  }
  return {true, std::to_string(commands.size()) +
                    " commands byte-identical at 1 and 8 threads"};
}

}  // namespace
}  // namespace fairdist

int main(int argc, char** argv) {
  using namespace fairdist;
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }
  Executor exec(0);
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"total-count-56", [] { return TotalCountCriterion(); }},
      {"partition-identity", [] { return PartitionCriterion(); }},
      {"oracle-equivalence", [&] { return OracleCriterion(exec); }},
      {"ae-sp-pmf-identity", [&] { return AeSpIdentityCriterion(exec); }},
      {"class-swap-duality", [&] { return ClassSwapCriterion(exec); }},
      {"undefined-condition-row", [&] { return UndefinedCriterion(exec); }},
      {"perfect-fairness-curve-shape", [&] { return PerfectFairnessCriterion(exec); }},
      {"property-report-pattern", [&] { return PropertyReportCriterion(exec); }},
      {"performance-n56", [&] { return PerformanceCriterion(exec); }},
      {"determinism-across-threads", [&] { return DeterminismCriterion(cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
