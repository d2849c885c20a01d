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

#include "pgtool/generators.h"

#include <algorithm>
#include <limits>
#include <set>

namespace pgtool {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kParamOutOfRange, "Rng::below needs a positive bound");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Mat random_invertible(const Field& field, std::size_t size, Rng& rng) {
  while (true) {
    Mat m(size, Vec(size));
    for (auto& row : m) {
      for (auto& x : row) x = static_cast<Elem>(rng.below(field.q()));
    }
    if (rank(field, m, size) == size) return m;
  }
}

SemilinearMap random_semilinear(FieldPtr field, std::size_t size, Rng& rng,
                                std::optional<FieldAutomorphism> alpha) {
  Mat m = random_invertible(*field, size, rng);
  const FieldAutomorphism a =
      alpha ? *alpha : FieldAutomorphism{static_cast<int>(rng.below(field->k()))};
  return SemilinearMap(std::move(field), std::move(m), a);
}

Point random_point(const Space& space, Rng& rng) {
  return space.point(rng.below(space.num_points()));
}

Subspace random_complement(const Subspace& s, Rng& rng) {
  const Space& space = s.space();
  const std::size_t needed = space.vec_size() - s.basis().size();
  while (true) {
    EchelonBasis basis(space.field(), space.vec_size());
    for (const auto& row : s.basis()) basis.insert(row);
    Mat picked;
    for (std::size_t attempt = 0; picked.size() < needed && attempt < 64 * space.vec_size();
         ++attempt) {
      Vec v(space.vec_size());
      for (auto& x : v) x = static_cast<Elem>(rng.below(space.field().q()));
      if (basis.insert(v)) picked.push_back(std::move(v));
    }
    if (picked.size() == needed) return Subspace::span_vectors(space, picked);
  }
}

PointMap veronese_map(const Space& source) {
  const Veronese veronese(source);
  std::vector<Point> table;
  for (const auto& x : source.points()) table.push_back(veronese.rho(x));
  return PointMap(source, veronese.target(), std::move(table));
}

PointMap veronese_kappa_map(const Space& source, const SemilinearMap& kappa) {
  const Veronese veronese(source);
  std::vector<Point> table;
  for (const auto& x : source.points()) table.push_back(kappa.apply(veronese.rho(x)));
  return PointMap(source, veronese.target(), std::move(table));
}

PointMap veronese_into_extension(const Space& source, FieldPtr bigger) {
  const auto inclusion = subfield_embedding(source.field(), *bigger);
  if (!inclusion) throw Error(ErrorCode::kForeignTarget, "target field has no such subfield");
  const Veronese veronese(source);
  const Space target(bigger, veronese.target().n());
  std::vector<Point> table;
  for (const auto& x : source.points()) {
    Vec y = veronese.rho(x).coords();
    for (auto& c : y) c = (*inclusion)[c];
    table.emplace_back(*bigger, std::move(y));
  }
  return PointMap(source, target, std::move(table));
}

std::string to_string(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::kVeronese: return "veronese";
    case EmbeddingKind::kVeroneseKappa: return "veronese_kappa";
    case EmbeddingKind::kFrameInjection: return "frame_injection";
    case EmbeddingKind::kBroken: return "broken";
  }
  return "unknown";
}

EmbeddingKind parse_embedding_kind(const std::string& text) {
  for (auto k : {EmbeddingKind::kVeronese, EmbeddingKind::kVeroneseKappa,
                 EmbeddingKind::kFrameInjection, EmbeddingKind::kBroken}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::kParamOutOfRange, "unknown embedding kind '" + text + "'");
}

PointMap generate_embedding(EmbeddingKind kind, int n, FieldPtr field, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kParamOutOfRange, "n must be >= 1");
  const Space source(field, n);
  if (source.num_points() > 100'000) {
    throw Error(ErrorCode::kParamOutOfRange, "source space too large to tabulate");
  }
  const Veronese veronese(source);
  Rng rng(seed);
  switch (kind) {
    case EmbeddingKind::kVeronese:
      return veronese_map(source);
    case EmbeddingKind::kVeroneseKappa:
      return veronese_kappa_map(source,
                                random_semilinear(field, veronese.target().vec_size(), rng));
    case EmbeddingKind::kFrameInjection: {
      if (n != 2 || field->q() != 2) {
        throw Error(ErrorCode::kParamOutOfRange, "frame_injection needs n = 2 and q = 2");
      }
      const Space& target = veronese.target();
      const Mat a = random_invertible(*field, target.vec_size(), rng);
      const Mat columns = transpose(a);
      std::vector<Point> frame;
      for (const auto& c : columns) frame.emplace_back(*field, c);
      frame.emplace_back(*field, apply(*field, a, Vec(target.vec_size(), 1)));
      for (std::size_t i = frame.size(); i > 1; --i) {
        std::swap(frame[i - 1], frame[rng.below(i)]);
      }
      return PointMap(source, target, std::move(frame));
    }
    case EmbeddingKind::kBroken: {
      const PointMap base = veronese_kappa_map(
          source, random_semilinear(field, veronese.target().vec_size(), rng));
      std::vector<Point> table = base.table();
      const std::size_t count = table.size();
      const std::size_t moved = rng.below(count);
      std::size_t y = rng.below(count - 1);
      if (y >= moved) ++y;
      std::size_t z = rng.below(count - 2);
      for (std::size_t skip : {std::min(moved, y), std::max(moved, y)}) {
        if (z >= skip) ++z;
      }
      const Point ends[2] = {table[y], table[z]};
      const std::set<Point> image(table.begin(), table.end());
      std::vector<Point> fresh;
      for (const auto& p : Subspace::span(base.target(), ends).points()) {
        if (!image.count(p)) fresh.push_back(p);
      }
      if (fresh.empty()) {
        throw Error(ErrorCode::kParamOutOfRange, "no free point on the chosen secant");
      }
      table[moved] = fresh[rng.below(fresh.size())];
      return PointMap(source, base.target(), std::move(table));
    }
  }
  throw Error(ErrorCode::kParamOutOfRange, "unknown embedding kind");
}

}  // namespace pgtool
