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

#ifndef PGTOOL_VERONESE_H_
#define PGTOOL_VERONESE_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pgtool/projective.h"

namespace pgtool {

// Number of degree-2 monomials in t+1 variables, C(t+2, 2).
std::int64_t delta(int t);

// The quadratic Veronese map PG(n,q) -> PG(C(n+2,2)-1, q), y_ij = x_i x_j.
//
// Monomials are flattened in the order (0,0),(0,1),...,(0,n),(1,1),...,(n,n).
// QuadraticForm coefficients use the same order, so a form c vanishes at X
// exactly when sum_ij c_ij y_ij = 0 for y = rho(X).
class Veronese {
 public:
  explicit Veronese(const Space& source);

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }

  std::size_t flat_index(int i, int j) const;
  std::pair<int, int> monomial(std::size_t flat) const { return pairs_[flat]; }

  // Raw monomial vector of x (not normalized).
  Vec monomials(const Vec& x) const;
  Point rho(const Point& x) const;
  // The unique X with rho(X) = y, or std::nullopt if y is off the variety.
  std::optional<Point> preimage(const Point& y) const;

 private:
  Space source_;
  Space target_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<std::size_t>> index_;
};

}  // namespace pgtool

#endif  // PGTOOL_VERONESE_H_
