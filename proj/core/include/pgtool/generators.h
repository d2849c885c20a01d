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

#ifndef PGTOOL_GENERATORS_H_
#define PGTOOL_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "pgtool/embedding.h"
#include "pgtool/projective.h"

namespace pgtool {

// Seeded generator: MT19937-64 (std::mt19937_64) with the seed passed
// verbatim. Integers below a bound are drawn by rejection sampling on the raw
// 64-bit outputs, so sequences are reproducible across implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

Mat random_invertible(const Field& field, std::size_t size, Rng& rng);
// Random invertible matrix with a random automorphism, unless alpha is given.
SemilinearMap random_semilinear(FieldPtr field, std::size_t size, Rng& rng,
                                std::optional<FieldAutomorphism> alpha = std::nullopt);
Point random_point(const Space& space, Rng& rng);
// Random subspace of dimension n' - dim(s) - 1 meeting s trivially.
Subspace random_complement(const Subspace& s, Rng& rng);

PointMap veronese_map(const Space& source);
// X -> kappa(rho(X)).
PointMap veronese_kappa_map(const Space& source, const SemilinearMap& kappa);
// rho followed by the coordinatewise inclusion of the field into a larger
// field of the same characteristic.
PointMap veronese_into_extension(const Space& source, FieldPtr bigger);

enum class EmbeddingKind { kVeronese, kVeroneseKappa, kFrameInjection, kBroken };

std::string to_string(EmbeddingKind kind);
EmbeddingKind parse_embedding_kind(const std::string& text);

// veronese: rho. veronese_kappa: rho composed with a seeded semilinear map.
// frame_injection (n = 2, q = 2 only): a seeded bijection onto a seeded frame
// of PG(5,2). broken: a veronese_kappa map with one image moved onto the
// secant of two other images, so that the two-point set is a witness.
PointMap generate_embedding(EmbeddingKind kind, int n, FieldPtr field, std::uint64_t seed);

}  // namespace pgtool

#endif  // PGTOOL_GENERATORS_H_
