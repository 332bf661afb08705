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

#include "enumeration.h"

#include <algorithm>

#include "error.h"

namespace fairdist {

std::optional<Count> TryTotalCount(std::int64_t n) {
  if (n < 0) return std::nullopt;
  // After step i, c == C(n+i, i); dividing out gcd(c, i) first keeps the
  // intermediate product within the final magnitude.
  Count::Raw c = 1;
  for (std::int64_t i = 1; i <= 7; ++i) {
    Count::Raw x = c, y = static_cast<Count::Raw>(i);
    while (y != 0) {
      Count::Raw t = x % y;
      x = y;
      y = t;
    }
    Count::Raw reduced_c = c / x;
    Count::Raw factor = static_cast<Count::Raw>(n + i) /
                        (static_cast<Count::Raw>(i) / x);
    if (factor != 0 && reduced_c > ~Count::Raw{0} / factor) return std::nullopt;
    c = reduced_c * factor;
  }
  return Count::FromRaw(c);
}

std::int64_t MaxSupportedN() {
  static const std::int64_t kMax = [] {
    std::int64_t lo = 0, hi = std::int64_t{1} << 40;
    while (lo < hi) {
      std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (TryTotalCount(mid)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return lo;
  }();
  return kMax;
}

Count TotalCount(std::int64_t n) {
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "n must be non-negative");
  auto c = TryTotalCount(n);
  if (!c) {
    Fail(ErrorCode::kOverflow,
         "C(n+7, 7) overflows 128 bits for n=" + std::to_string(n) +
             "; maximum supported n is " + std::to_string(MaxSupportedN()));
  }
  return *c;
}

Count StratumCells::PairCount() const {
  return Count(static_cast<std::uint64_t>(protected_positives + 1)) *
         Count(static_cast<std::uint64_t>(protected_negatives + 1)) *
         Count(static_cast<std::uint64_t>(unprotected_positives + 1)) *
         Count(static_cast<std::uint64_t>(unprotected_negatives + 1));
}

ProtectedPositiveRange AdmissibleRange(const Stratum& s) {
  return {std::max<std::int64_t>(0, s.p() + s.n_p() - s.n()),
          std::min(s.p(), s.n_p())};
}

StratumCells CellsFor(const Stratum& s, std::int64_t pp) {
  return {pp, s.n_p() - pp, s.p() - pp, s.n() - s.p() - s.n_p() + pp};
}

Count StratumCount(const Stratum& s) {
  Count total;
  auto range = AdmissibleRange(s);
  for (std::int64_t pp = range.lo; pp <= range.hi; ++pp) {
    total += CellsFor(s, pp).PairCount();
  }
  return total;
}

AllPairsCursor::AllPairsCursor(std::int64_t n) : AllPairsCursor(n, 0, {}) {}

AllPairsCursor::AllPairsCursor(std::int64_t n, int fixed,
                               std::array<std::int64_t, 8> init)
    : n_(n), first_free_(fixed), prefix_(init) {
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "n must be non-negative");
  std::int64_t used = 0;
  for (int i = 0; i < fixed; ++i) used += init[i];
  if (used > n) Fail(ErrorCode::kInvalidArgument, "chunk prefix exceeds n");
}

AllPairsCursor AllPairsCursor::Chunk(std::int64_t n, std::int64_t tp_p,
                                     std::int64_t fn_p) {
  if (tp_p < 0 || fn_p < 0) {
    Fail(ErrorCode::kInvalidArgument, "negative chunk prefix");
  }
  return AllPairsCursor(n, 2, {tp_p, fn_p, 0, 0, 0, 0, 0, 0});
}

void AllPairsCursor::Reset() {
  started_ = false;
  done_ = false;
}

bool AllPairsCursor::Next(ConfusionPair* out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    std::int64_t remaining = n_;
    for (int i = 0; i < first_free_; ++i) {
      a_[i] = prefix_[i];
      remaining -= prefix_[i];
    }
    for (int i = first_free_; i < 7; ++i) a_[i] = 0;
    a_[7] = remaining;
  } else {
    if (first_free_ >= 7) {
      done_ = true;
      return false;
    }
    if (a_[7] > 0) {
      ++a_[6];
      --a_[7];
    } else {
      int t = 6;
      while (t >= first_free_ && a_[t] == 0) --t;
      if (t <= first_free_) {
        done_ = true;
        return false;
      }
      ++a_[t - 1];
      a_[7] = a_[t] - 1;
      a_[t] = 0;
    }
  }
  *out = {{a_[0], a_[1], a_[2], a_[3]}, {a_[4], a_[5], a_[6], a_[7]}};
  return true;
}

std::vector<std::pair<std::int64_t, std::int64_t>> AllPairsChunks(
    std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> chunks;
  for (std::int64_t a = 0; a <= n; ++a) {
    for (std::int64_t b = 0; a + b <= n; ++b) chunks.emplace_back(a, b);
  }
  return chunks;
}

StratumCursor::StratumCursor(const Stratum& s)
    : StratumCursor(s, AdmissibleRange(s).lo, AdmissibleRange(s).hi) {}

StratumCursor::StratumCursor(const Stratum& s, std::int64_t pp_lo,
                             std::int64_t pp_hi)
    : stratum_(s) {
  auto range = AdmissibleRange(s);
  lo_ = std::max(pp_lo, range.lo);
  hi_ = std::min(pp_hi, range.hi);
}

void StratumCursor::Reset() {
  started_ = false;
  done_ = false;
}

bool StratumCursor::Next(ConfusionPair* out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (lo_ > hi_) {
      done_ = true;
      return false;
    }
    pp_ = lo_;
    cells_ = CellsFor(stratum_, pp_);
    tp_p_ = fp_p_ = tp_up_ = fp_up_ = 0;
  } else if (fp_up_ < cells_.unprotected_negatives) {
    ++fp_up_;
  } else if (tp_up_ < cells_.unprotected_positives) {
    ++tp_up_;
    fp_up_ = 0;
  } else if (fp_p_ < cells_.protected_negatives) {
    ++fp_p_;
    tp_up_ = fp_up_ = 0;
  } else if (tp_p_ < cells_.protected_positives) {
    ++tp_p_;
    fp_p_ = tp_up_ = fp_up_ = 0;
  } else if (pp_ < hi_) {
    ++pp_;
    cells_ = CellsFor(stratum_, pp_);
    tp_p_ = fp_p_ = tp_up_ = fp_up_ = 0;
  } else {
    done_ = true;
    return false;
  }
  const auto& c = cells_;
  out->protected_group = {tp_p_, c.protected_positives - tp_p_, fp_p_,
                          c.protected_negatives - fp_p_};
  out->unprotected_group = {tp_up_, c.unprotected_positives - tp_up_, fp_up_,
                            c.unprotected_negatives - fp_up_};
  return true;
}

}  // namespace fairdist
