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

#ifndef PGTOOL_IO_H_
#define PGTOOL_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "pgtool/arcs.h"
#include "pgtool/embedding.h"
#include "pgtool/field.h"
#include "pgtool/projective.h"

namespace pgtool {

using Json = nlohmann::json;

// {"p": int, "k": int, "modulus": [int, ...]}. Reading validates that the
// modulus is the canonical one.
Json to_json(const Field& field);
FieldPtr field_from_json(const Json& j);

// Points are integer-code vectors; reading normalizes them.
Json to_json(const Point& p);
Point point_from_json(const Space& space, const Json& j);

// Subspaces are lists of point vectors; any spanning set is accepted on read.
Json to_json(const Subspace& s);
Subspace subspace_from_json(const Space& space, const Json& j);

// {"field": {...}, "n": int, "n_prime": int, "pairs": [[[src], [tgt]], ...]}
// with pairs in source enumeration order. Source and target share the field.
Json to_json(const PointMap& map);
PointMap point_map_from_json(const Json& j);

// {"matrix": [[codes]], "alpha_exponent": int}
Json to_json(const SemilinearMap& kappa);
SemilinearMap semilinear_from_json(FieldPtr field, const Json& j);

Json to_json(const QuadraticForm& form);
Json to_json(const EmbeddingReport& report);
Json to_json(const OvalScanReport& report);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace pgtool

#endif  // PGTOOL_IO_H_
