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

#ifndef FAIRDIST_BATCH_H_
#define FAIRDIST_BATCH_H_

#include <istream>
#include <ostream>
#include <string_view>

namespace fairdist {

// Scores a JSON-lines batch of confusion pairs. Each record is either
//   {"id": ..., "counts": [tp_p, fn_p, fp_p, tn_p, tp_up, fn_up, fp_up, tn_up]}
// or uses the named keys tp_p ... tn_up. Writes one JSON line per record, in
// input order, with every measure as "num/den" or "undefined". Blank lines are
// skipped. A malformed record throws kInvalidArgument naming its index.
void ScoreBatch(std::istream& in, std::ostream& out);

}  // namespace fairdist

#endif  // FAIRDIST_BATCH_H_
