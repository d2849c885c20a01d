// Copyright 2026 The pgtool Authors
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

#include "pgtool/io.h"

#include <fstream>

namespace pgtool {
namespace {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParseError, std::string("missing key '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

Vec codes_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "expected an array of element codes");
  Vec out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      throw Error(ErrorCode::kParseError, "element codes must be non-negative integers");
    }
    out.push_back(static_cast<Elem>(x.get<long long>()));
  }
  return out;
}

}  // namespace

Json to_json(const Field& field) {
  return Json{{"p", field.p()}, {"k", field.k()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
  const auto field = create_field(get<int>(j, "p"), get<int>(j, "k"));
  if (j.contains("modulus") && get<std::vector<int>>(j, "modulus") != field->modulus()) {
    throw Error(ErrorCode::kParseError, "modulus is not the canonical one");
  }
  return field;
}

Json to_json(const Point& p) { return Json(p.coords()); }

Point point_from_json(const Space& space, const Json& j) {
  Vec v = codes_from_json(j);
  if (v.size() != space.vec_size()) {
    throw Error(ErrorCode::kSpaceMismatch, "point has the wrong number of coordinates");
  }
  for (Elem x : v) {
    if (x >= space.field().q()) throw Error(ErrorCode::kParseError, "element code out of range");
  }
  return Point(space.field(), std::move(v));
}

Json to_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& row : s.basis()) out.push_back(Point(s.space().field(), row).coords());
  return out;
}

Subspace subspace_from_json(const Space& space, const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "subspace must be a list of points");
  std::vector<Point> pts;
  for (const auto& p : j) pts.push_back(point_from_json(space, p));
  return Subspace::span(space, pts);
}

Json to_json(const PointMap& map) {
  if (!(map.source().field() == map.target().field())) {
    throw Error(ErrorCode::kForeignTarget, "map files describe maps over a single field");
  }
  Json pairs = Json::array();
  for (std::size_t i = 0; i < map.table().size(); ++i) {
    pairs.push_back(Json::array({to_json(map.source().point(i)), to_json(map.table()[i])}));
  }
  return Json{{"field", to_json(map.source().field())},
              {"n", map.source().n()},
              {"n_prime", map.target().n()},
              {"pairs", pairs}};
}

PointMap point_map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field")) {
    throw Error(ErrorCode::kParseError, "map file needs a 'field' object");
  }
  const FieldPtr field = field_from_json(j.at("field"));
  const int n = get<int>(j, "n");
  const int n_prime = get<int>(j, "n_prime");
  if (n < 1 || n_prime < 1) throw Error(ErrorCode::kParseError, "dimensions must be >= 1");
  const Space source(field, n);
  const Space target(field, n_prime);
  if (!j.contains("pairs") || !j.at("pairs").is_array()) {
    throw Error(ErrorCode::kParseError, "map file needs a 'pairs' array");
  }
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& entry : j.at("pairs")) {
    if (!entry.is_array() || entry.size() != 2) {
      throw Error(ErrorCode::kParseError, "each pair must be [[source], [target]]");
    }
    pairs.emplace_back(point_from_json(source, entry[0]), point_from_json(target, entry[1]));
  }
  return PointMap::from_pairs(source, target, std::move(pairs));
}

Json to_json(const SemilinearMap& kappa) {
  return Json{{"matrix", kappa.matrix()}, {"alpha_exponent", kappa.alpha().exponent}};
}

SemilinearMap semilinear_from_json(FieldPtr field, const Json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j.at("matrix").is_array()) {
    throw Error(ErrorCode::kParseError, "semilinear map needs a 'matrix' array");
  }
  Mat m;
  for (const auto& row : j.at("matrix")) {
    Vec r = codes_from_json(row);
    for (Elem x : r) {
      if (x >= field->q()) throw Error(ErrorCode::kParseError, "element code out of range");
    }
    m.push_back(std::move(r));
  }
  for (const auto& r : m) {
    if (r.size() != m.size()) throw Error(ErrorCode::kParseError, "matrix must be square");
  }
  const int alpha = get<int>(j, "alpha_exponent");
  if (alpha < 0 || alpha >= field->k()) {
    throw Error(ErrorCode::kParseError, "alpha_exponent out of range");
  }
  return SemilinearMap(std::move(field), std::move(m), {alpha});
}

Json to_json(const QuadraticForm& form) {
  if (form.is_no_form()) return Json("no-form");
  return Json(form.coeffs());
}

Json to_json(const EmbeddingReport& report) {
  Json j{{"is_embedding", report.is_embedding},
         {"mode", to_string(report.mode)},
         {"span_condition", report.span_condition},
         {"sets_checked", report.sets_checked},
         {"field_relation_ok", report.field_relation_ok}};
  if (report.violated_set) {
    Json w = Json::array();
    for (const auto& p : *report.violated_set) w.push_back(to_json(p));
    j["violated_set"] = w;
  }
  return j;
}

Json to_json(const OvalScanReport& report) {
  Json witnesses = Json::array();
  for (const auto& oval : report.non_conic_ovals) {
    Json o = Json::array();
    for (const auto& p : oval) o.push_back(to_json(p));
    witnesses.push_back(o);
  }
  return Json{{"q", report.q},
              {"ovals", report.ovals},
              {"conics", report.conics},
              {"non_conic_ovals", witnesses}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, "'" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write '" + path + "'");
  out << j.dump() << "\n";
}

}  // namespace pgtool
