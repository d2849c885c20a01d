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

#ifndef PGTOOL_PROJECTIVE_H_
#define PGTOOL_PROJECTIVE_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "pgtool/field.h"
#include "pgtool/linalg.h"

namespace pgtool {

class Space;

// A point of PG(n,q) in canonical form: the first nonzero coordinate is 1.
// Ordering is lexicographic on coordinate codes, which is also the
// enumeration order of Space::points().
class Point {
 public:
  Point() = default;
  // Normalizes v; throws kZeroVector for the zero vector.
  Point(const Field& field, Vec v);

  const Vec& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  Elem operator[](std::size_t i) const { return coords_[i]; }

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  Vec coords_;
};

// PG(n,q) over a shared field.
class Space {
 public:
  Space(FieldPtr field, int n);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int n() const { return n_; }
  std::size_t vec_size() const { return static_cast<std::size_t>(n_) + 1; }
  std::uint64_t num_points() const { return num_points_; }

  // index in [0, num_points) <-> point, in lexicographic order.
  Point point(std::uint64_t index) const;
  std::uint64_t index_of(const Point& p) const;
  // All points; throws kSizeCapExceeded above 10^6 points.
  std::vector<Point> points() const;
  Point normalize(Vec v) const { return Point(*field_, std::move(v)); }
  // Throws kSpaceMismatch unless p has n+1 coordinates in range.
  void check(const Point& p) const;

  friend bool operator==(const Space& a, const Space& b) {
    return a.n_ == b.n_ && *a.field_ == *b.field_;
  }

 private:
  FieldPtr field_;
  int n_;
  std::uint64_t num_points_;
};

inline constexpr std::uint64_t kMaxEnumeratedPoints = 1'000'000;

// Subspace of PG(n,q) stored as a reduced row-echelon basis. The empty
// subspace has dimension -1.
class Subspace {
 public:
  explicit Subspace(Space space);  // empty subspace

  static Subspace span(const Space& space, std::span<const Point> points);
  static Subspace span_vectors(const Space& space, std::span<const Vec> vectors);
  static Subspace whole(const Space& space);
  // Common zeros of the given linear forms.
  static Subspace from_equations(const Space& space, std::span<const Vec> equations);

  const Space& space() const { return space_; }
  int dim() const { return static_cast<int>(basis_.size()) - 1; }
  bool empty() const { return basis_.empty(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Point& p) const { return contains(p.coords()); }
  bool contains(const Subspace& other) const;

  // Coordinates of a vector of the subspace with respect to basis(); the
  // entries at the pivot columns, since the basis is reduced.
  Vec coordinates(const Vec& v) const;
  // Vector with the given coordinates with respect to basis().
  Vec combine(const Vec& coeffs) const;
  // Linear forms cutting out the subspace (a basis of its annihilator).
  Mat equations() const;
  // All points, in the order of the coefficient vectors' enumeration.
  std::vector<Point> points() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.space_ == b.space_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(Space space, Mat basis, std::vector<std::size_t> pivots);

  Space space_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace join(const Subspace& a, const Subspace& b);
Subspace meet(const Subspace& a, const Subspace& b);
// Hyperplanes of the space, in the order of their dual coordinate points.
std::vector<Subspace> hyperplanes(const Space& space);
// All lines of the space, each once, ordered by their two smallest points.
std::vector<Subspace> all_lines(const Space& space);
// Subspace extension by unit vectors: a complement of s chosen greedily.
Subspace standard_complement(const Subspace& s);

// Lines through p inside a subspace of dimension >= 1.
std::vector<Subspace> lines_through(const Point& p, const Subspace& inside);
std::vector<Point> line_points(const Subspace& line);

// span(base u {x}), a point of the quotient geometry modulo base.
using QuotientPoint = Subspace;
QuotientPoint quotient_point(const Subspace& base, const Point& x);

// Ordered frame (m+2 points of PG(m,q), any m+1 of them independent).
class Frame {
 public:
  Frame(const Space& space, std::vector<Point> points);

  static Frame standard(const Space& space);

  const std::vector<Point>& points() const { return points_; }
  // Representatives v_0..v_m of the first m+1 points, scaled so that their
  // sum represents the last point.
  const Mat& scaled_basis() const { return scaled_; }
  // Homogeneous coordinates of x in the frame's coordinate system, normalized.
  Vec coordinates(const Point& x) const;

 private:
  Space space_;
  std::vector<Point> points_;
  Mat scaled_;
};

bool is_frame(const Space& space, std::span<const Point> points);

// X -> matrix * (X with alpha applied entrywise).
class SemilinearMap {
 public:
  SemilinearMap(FieldPtr field, Mat matrix, FieldAutomorphism alpha);

  static SemilinearMap identity(FieldPtr field, std::size_t size);

  const Mat& matrix() const { return matrix_; }
  FieldAutomorphism alpha() const { return alpha_; }
  std::size_t size() const { return matrix_.size(); }
  bool is_projective() const { return alpha_.exponent == 0; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  Vec apply(const Vec& v) const;
  Point apply(const Point& p) const;
  Subspace apply(const Subspace& s) const;

  // The map "this, then next".
  SemilinearMap then(const SemilinearMap& next) const;
  SemilinearMap inverse() const;

 private:
  FieldPtr field_;
  Mat matrix_;
  FieldAutomorphism alpha_;
};

Vec apply_automorphism(const Field& field, FieldAutomorphism alpha, const Vec& v);

}  // namespace pgtool

#endif  // PGTOOL_PROJECTIVE_H_
