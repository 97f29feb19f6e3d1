// Copyright 2026 The dichoq Authors
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

#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "dichoq/codec.hpp"
#include "dichoq/frames.hpp"
#include "dichoq/genstates.hpp"
#include "dichoq/inequality.hpp"
#include "dichoq/matcore.hpp"

// Document schemas (indices one-based):
//   matrix     {"dim": N, "entries": [[re, im], ...]}   N^2 pairs, row-major
//   table      {"dim": N, "p3": [N-1 reals], "planes": [{"j", "k", "p1", "p2"}, ...]}
//   rotated    {"dim": N, "rotation": [[3 reals] x 3], "planes": [{"j", "k", "p1", "p2", "p3"}]}
//   report     [{"name", "lhs", "bound", "slack", "satisfied"}, ...]
//   fixture    matrix + {"seed": u64, "ensemble": "pure" | "mixed" | "product"}
// Planes are listed lexicographically by (j, k). Non-finite reals are written as null.

namespace dichoq {

using Json = nlohmann::json;

/// Throws ParseError.
Json parse_json(std::string_view text);
/// Sorted keys, shortest round-trip floats, two-space indent, trailing newline.
std::string canonical_dump(const Json& doc);

Json matrix_to_json(const ComplexMatrix& m);
/// Throws ParseError on schema violations.
ComplexMatrix matrix_from_json(const Json& doc);

Json table_to_json(const DichotomicTable& t);
/// Throws ParseError on schema violations, InvalidTable on out-of-range values.
DichotomicTable table_from_json(const Json& doc);
/// "j,k,p1,p2" rows, a blank line, then "j,p3" rows.
std::string table_to_csv(const DichotomicTable& t);

Json plane_table_to_json(const PlaneTable& t);

Json rotation_to_json(const Rotation& r);
/// Accepts a nested 3x3 array or a flat array of 9, row-major. Throws ParseError,
/// NotOrthogonal, NotSpecial.
Rotation rotation_from_json(const Json& doc);

Json report_to_json(const InequalityReport& r);
Json diagnostics_to_json(const InequalityReport& r);

Json fixture_to_json(const ComplexMatrix& m, Seed seed, std::string_view ensemble);

}  // namespace dichoq
