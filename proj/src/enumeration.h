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

#ifndef FAIRDIST_ENUMERATION_H_
#define FAIRDIST_ENUMERATION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "count.h"
#include "types.h"

namespace fairdist {

// Number of 8-tuples of non-negative integers summing to n: C(n+7, 7).
// Throws kOverflow (naming MaxSupportedN()) past 128 bits.
Count TotalCount(std::int64_t n);
std::optional<Count> TryTotalCount(std::int64_t n);
std::int64_t MaxSupportedN();

// Cell sizes of a stratum once the number of protected positives is fixed.
struct StratumCells {
  std::int64_t protected_positives;
  std::int64_t protected_negatives;
  std::int64_t unprotected_positives;
  std::int64_t unprotected_negatives;

  // (P_p+1)(N_p+1)(P_up+1)(N_up+1)
  Count PairCount() const;
};

// Admissible protected-positive counts [lo, hi] of a stratum:
// lo = max(0, P + n_p - n), hi = min(P, n_p).
struct ProtectedPositiveRange {
  std::int64_t lo;
  std::int64_t hi;

  bool empty() const { return lo > hi; }
};

ProtectedPositiveRange AdmissibleRange(const Stratum& s);
StratumCells CellsFor(const Stratum& s, std::int64_t protected_positives);

// Sum over admissible P_p of StratumCells::PairCount().
Count StratumCount(const Stratum& s);

// Streams every confusion pair with entries summing to n, in ascending
// lexicographic order of (TP_p, FN_p, FP_p, TN_p, TP_up, FN_up, FP_up, TN_up).
// A chunk fixes (TP_p, FN_p); concatenating the chunks from AllPairsChunks()
// reproduces the full stream.
class AllPairsCursor {
 public:
  explicit AllPairsCursor(std::int64_t n);
  static AllPairsCursor Chunk(std::int64_t n, std::int64_t tp_p,
                              std::int64_t fn_p);

  bool Next(ConfusionPair* out);
  void Reset();

 private:
  AllPairsCursor(std::int64_t n, int fixed, std::array<std::int64_t, 8> init);

  std::int64_t n_;
  int first_free_;
  std::array<std::int64_t, 8> prefix_;
  std::array<std::int64_t, 8> a_{};
  bool started_ = false;
  bool done_ = false;
};

std::vector<std::pair<std::int64_t, std::int64_t>> AllPairsChunks(
    std::int64_t n);

// Streams the pairs of one stratum straight from its decomposition, ordered by
// ascending P_p, then TP_p, FP_p, TP_up, FP_up. The optional P_p sub-range
// lets independent workers consume disjoint chunks.
class StratumCursor {
 public:
  explicit StratumCursor(const Stratum& s);
  StratumCursor(const Stratum& s, std::int64_t pp_lo, std::int64_t pp_hi);

  bool Next(ConfusionPair* out);
  void Reset();

 private:
  Stratum stratum_;
  std::int64_t lo_;
  std::int64_t hi_;
  StratumCells cells_{};
  std::int64_t pp_ = 0;
  std::int64_t tp_p_ = 0, fp_p_ = 0, tp_up_ = 0, fp_up_ = 0;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace fairdist

#endif  // FAIRDIST_ENUMERATION_H_
