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

#include "dichoq/json_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace dichoq {

namespace {

const Json& require_field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

double as_real(const Json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + " must be a number");
  return v.get<double>();
}

std::size_t as_index(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

Json real_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string format_real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string canonical_dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (const auto& z : m.entries()) entries.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& doc) {
  const std::size_t dim = as_index(require_field(doc, "dim"), "dim");
  if (dim == 0) throw ParseError("dim must be positive");
  const auto& entries = require_field(doc, "entries");
  if (!entries.is_array() || entries.size() != dim * dim) {
    std::ostringstream os;
    os << "entries must be an array of " << dim * dim << " [re, im] pairs";
    throw ParseError(os.str());
  }
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (const auto& pair : entries) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("each entry must be [re, im]");
    values.emplace_back(as_real(pair[0], "re"), as_real(pair[1], "im"));
  }
  return ComplexMatrix(dim, std::move(values));
}

Json table_to_json(const DichotomicTable& t) {
  Json planes = Json::array();
  for (const auto& pp : t.planes())
    planes.push_back(
        {{"j", pp.plane.j() + 1}, {"k", pp.plane.k() + 1}, {"p1", pp.p1}, {"p2", pp.p2}});
  Json p3 = Json::array();
  for (double p : t.p3()) p3.push_back(p);
  return Json{{"dim", t.dim()}, {"p3", std::move(p3)}, {"planes", std::move(planes)}};
}

DichotomicTable table_from_json(const Json& doc) {
  const std::size_t dim = as_index(require_field(doc, "dim"), "dim");
  if (dim < 2) throw ParseError("table dim must be >= 2");
  const auto& p3_doc = require_field(doc, "p3");
  const auto& planes_doc = require_field(doc, "planes");
  if (!p3_doc.is_array()) throw ParseError("p3 must be an array");
  if (!planes_doc.is_array()) throw ParseError("planes must be an array");

  std::vector<double> p3;
  for (const auto& v : p3_doc) p3.push_back(as_real(v, "p3"));
  std::vector<PlaneProbabilities> planes;
  for (const auto& p : planes_doc) {
    const std::size_t j = as_index(require_field(p, "j"), "j");
    const std::size_t k = as_index(require_field(p, "k"), "k");
    if (j == 0 || k == 0) throw ParseError("plane indices are one-based");
    try {
      planes.push_back({PlaneIndex(j - 1, k - 1, dim), as_real(require_field(p, "p1"), "p1"),
                        as_real(require_field(p, "p2"), "p2")});
    } catch (const IndexOutOfRange& e) {
      throw ParseError(e.what());
    }
  }
  return DichotomicTable::make(dim, std::move(p3), std::move(planes));
}

std::string table_to_csv(const DichotomicTable& t) {
  std::string out = "j,k,p1,p2\n";
  for (const auto& pp : t.planes()) {
    out += std::to_string(pp.plane.j() + 1) + "," + std::to_string(pp.plane.k() + 1) + "," +
           format_real(pp.p1) + "," + format_real(pp.p2) + "\n";
  }
  out += "\nj,p3\n";
  for (std::size_t j = 0; j < t.p3().size(); ++j)
    out += std::to_string(j + 1) + "," + format_real(t.p3()[j]) + "\n";
  return out;
}

Json plane_table_to_json(const PlaneTable& t) {
  Json planes = Json::array();
  for (const auto& e : t.entries())
    planes.push_back({{"j", e.plane.j() + 1},
                      {"k", e.plane.k() + 1},
                      {"p1", e.p1},
                      {"p2", e.p2},
                      {"p3", e.p3}});
  return Json{{"dim", t.dim()}, {"planes", std::move(planes)}, {"rotation", rotation_to_json(t.rotation())}};
}

Json rotation_to_json(const Rotation& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows()) rows.push_back(Json::array({row[0], row[1], row[2]}));
  return rows;
}

Rotation rotation_from_json(const Json& doc) {
  Rotation::Rows rows{};
  if (!doc.is_array()) throw ParseError("rotation must be an array");
  if (doc.size() == 9) {
    for (std::size_t i = 0; i < 9; ++i) rows[i / 3][i % 3] = as_real(doc[i], "rotation entry");
  } else if (doc.size() == 3) {
    for (std::size_t r = 0; r < 3; ++r) {
      if (!doc[r].is_array() || doc[r].size() != 3) throw ParseError("rotation rows must have 3 entries");
      for (std::size_t c = 0; c < 3; ++c) rows[r][c] = as_real(doc[r][c], "rotation entry");
    }
  } else {
    throw ParseError("rotation must be 3x3");
  }
  return Rotation::from_rows(rows);
}

Json report_to_json(const InequalityReport& r) {
  Json out = Json::array();
  for (const auto& e : r.entries())
    out.push_back({{"name", e.name},
                   {"lhs", real_or_null(e.lhs)},
                   {"bound", real_or_null(e.bound)},
                   {"slack", real_or_null(e.slack)},
                   {"satisfied", e.satisfied}});
  return out;
}

Json diagnostics_to_json(const InequalityReport& r) {
  Json out = Json::object();
  for (const auto& [k, v] : r.diagnostics()) out[k] = real_or_null(v);
  return out;
}

Json fixture_to_json(const ComplexMatrix& m, Seed seed, std::string_view ensemble) {
  Json doc = matrix_to_json(m);
  doc["seed"] = seed.value;
  doc["ensemble"] = std::string(ensemble);
  return doc;
}

}  // namespace dichoq
