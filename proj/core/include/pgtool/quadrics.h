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

#ifndef PGTOOL_QUADRICS_H_
#define PGTOOL_QUADRICS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "pgtool/projective.h"
#include "pgtool/veronese.h"

namespace pgtool {

// sum_{i<=j} c_ij x_i x_j, coefficients in the Veronese flat order, stored up
// to scalar (first nonzero coefficient 1). The "no-form" marker stands for the
// whole point set, which belongs to the family of quadrics by convention.
class QuadraticForm {
 public:
  QuadraticForm(const Space& space, Vec coeffs);
  static QuadraticForm no_form(const Space& space);

  bool is_no_form() const { return coeffs_.empty(); }
  const Vec& coeffs() const { return coeffs_; }
  int n() const { return n_; }

  // Value at a representative of x. Only its vanishing is projective.
  Elem evaluate(const Field& field, const Point& x) const;
  bool vanishes_at(const Field& field, const Point& x) const {
    return is_no_form() || evaluate(field, x) == 0;
  }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  QuadraticForm(int n) : n_(n) {}

  int n_;
  Vec coeffs_;
};

std::vector<Point> zero_set(const Space& space, const QuadraticForm& form);

struct ClosedSet {
  std::vector<Point> points;  // sorted
  Mat forms;                  // basis of the quadratic forms vanishing on them
};

using PointIndex = std::uint32_t;

// Precomputed Veronese images of every point of a space, for repeated closure
// queries on index sets. Index sets are sorted ascending.
class ClosureEngine {
 public:
  explicit ClosureEngine(const Space& space);

  const Space& space() const { return space_; }
  const Veronese& veronese() const { return veronese_; }
  const std::vector<Point>& points() const { return points_; }
  const Vec& rho_vector(PointIndex i) const { return rho_[i]; }
  PointIndex index_of(const Point& p) const;

  // {X : rho(X) in span(rho(M))}.
  std::vector<PointIndex> closure(std::span<const PointIndex> m) const;
  // Common zeros of all forms vanishing on M (whole space if none).
  std::vector<PointIndex> closure_by_forms(std::span<const PointIndex> m) const;
  // Forms vanishing on M, as a basis.
  Mat vanishing_forms(std::span<const PointIndex> m) const;
  // Points whose Veronese image lies in the span of the given basis.
  std::vector<PointIndex> members(const EchelonBasis& rho_span) const;

 private:
  Space space_;
  Veronese veronese_;
  std::vector<Point> points_;
  Mat rho_;
};

ClosedSet quadratic_closure(const Space& space, std::span<const Point> m);
// Same set, computed as the intersection of the quadrics through M.
std::vector<Point> closure_by_forms(const Space& space, std::span<const Point> m);
bool is_closed(const Space& space, std::span<const Point> m);

inline constexpr std::size_t kChainOracleMaxPoints = 13;

// Largest i with a chain {} < K_0 < ... < K_i = clos(M) of distinct closed
// sets. Exponential search; refuses closures with more than 13 points.
int longest_closed_chain(const Space& space, std::span<const Point> m);

}  // namespace pgtool

#endif  // PGTOOL_QUADRICS_H_
