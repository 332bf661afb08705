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

#include "batch.h"

#include <array>
#include <string>

#include "error.h"
#include "json.hpp"
#include "measures.h"

namespace fairdist {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<const char*, 8> kKeys = {
    "tp_p", "fn_p", "fp_p", "tn_p", "tp_up", "fn_up", "fp_up", "tn_up"};

[[noreturn]] void BadRecord(std::size_t index, const std::string& what) {
  Fail(ErrorCode::kInvalidArgument,
       "record " + std::to_string(index) + ": " + what);
}

std::int64_t CountValue(const Json& j, std::size_t index,
                        const std::string& field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    BadRecord(index, "'" + field + "' is not a non-negative integer");
  }
  return j.get<std::int64_t>();
}

ConfusionPair ParseRecord(const Json& j, std::size_t index) {
  if (!j.is_object()) BadRecord(index, "not a JSON object");
  std::array<std::int64_t, 8> v{};
  if (j.contains("counts")) {
    const Json& c = j["counts"];
    if (!c.is_array() || c.size() != 8) {
      BadRecord(index, "'counts' must be an array of 8 integers");
    }
    for (std::size_t i = 0; i < 8; ++i) {
      v[i] = CountValue(c[i], index, "counts[" + std::to_string(i) + "]");
    }
  } else {
    for (std::size_t i = 0; i < 8; ++i) {
      if (!j.contains(kKeys[i])) {
        BadRecord(index, std::string("missing field '") + kKeys[i] + "'");
      }
      v[i] = CountValue(j[kKeys[i]], index, kKeys[i]);
    }
  }
  return ConfusionPair::FromArray(v);
}

}  // namespace

void ScoreBatch(std::istream& in, std::ostream& out) {
  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::parse_error&) {
      BadRecord(index, "invalid JSON");
    }
    ConfusionPair pair = ParseRecord(record, index);
    Json result;
    result["index"] = index;
    if (record.contains("id")) result["id"] = record["id"];
    for (MeasureId m : kAllMeasures) {
      result[std::string(MeasureName(m))] = EvaluateMeasure(m, pair).ToString();
    }
    out << result.dump() << "\n";
    ++index;
  }
}

}  // namespace fairdist
