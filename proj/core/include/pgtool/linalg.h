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

#ifndef PGTOOL_LINALG_H_
#define PGTOOL_LINALG_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pgtool/field.h"

namespace pgtool {

using Vec = std::vector<Elem>;
using Mat = std::vector<Vec>;  // row-major

bool is_zero(const Vec& v);
// Scales v so that its first nonzero entry is 1. v must be nonzero.
Vec normalize_leading(const Field& field, Vec v);

// Reduced row-echelon basis that grows one vector at a time. The rows are kept
// fully reduced (zeros above and below every pivot, pivots equal to 1), sorted
// by pivot column. The field must outlive the basis.
class EchelonBasis {
 public:
  EchelonBasis(const Field& field, std::size_t cols);

  // Returns true when v was independent of the current rows.
  bool insert(Vec v);
  bool contains(const Vec& v) const;
  Vec reduce(Vec v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Mat& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  const Field* field_;
  std::size_t cols_;
  Mat rows_;
  std::vector<std::size_t> pivots_;
};

Mat rref(const Field& field, std::span<const Vec> rows, std::size_t cols);
std::size_t rank(const Field& field, std::span<const Vec> rows, std::size_t cols);

// Basis of {v : r . v = 0 for every row r}, in RREF.
Mat nullspace(const Field& field, std::span<const Vec> rows, std::size_t cols);

// Coefficients c with sum_i c_i vectors[i] = target, if any. The vectors need
// not be independent; the solution returned is then one of many.
std::optional<Vec> solve_combination(const Field& field,
                                     std::span<const Vec> vectors,
                                     const Vec& target);

std::optional<Mat> inverse(const Field& field, const Mat& square);
Mat multiply(const Field& field, const Mat& a, const Mat& b);
Vec apply(const Field& field, const Mat& a, const Vec& v);
Elem dot(const Field& field, const Vec& a, const Vec& b);
Mat transpose(const Mat& a);
Mat identity_matrix(std::size_t size);

}  // namespace pgtool

#endif  // PGTOOL_LINALG_H_
