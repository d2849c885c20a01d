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

#include "pgtool/linalg.h"

#include <algorithm>

namespace pgtool {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Vec normalize_leading(const Field& field, Vec v) {
  auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
  if (it == v.end()) throw Error(ErrorCode::kZeroVector, "cannot normalize the zero vector");
  const Elem scale = field.inv(*it);
  for (auto& x : v) x = field.mul(x, scale);
  return v;
}

EchelonBasis::EchelonBasis(const Field& field, std::size_t cols)
    : field_(&field), cols_(cols) {}

Vec EchelonBasis::reduce(Vec v) const {
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = v[pivots_[i]];
    if (c == 0) continue;
    const Vec& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < cols_; ++j) {
      if (row[j] != 0) v[j] = f.sub(v[j], f.mul(c, row[j]));
    }
  }
  return v;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(Vec v) {
  if (v.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length does not match basis");
  }
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < cols_ && v[pivot] == 0) ++pivot;
  if (pivot == cols_) return false;
  const Field& f = *field_;
  const Elem scale = f.inv(v[pivot]);
  for (std::size_t j = pivot; j < cols_; ++j) v[j] = f.mul(v[j], scale);
  for (auto& row : rows_) {
    const Elem c = row[pivot];
    if (c == 0) continue;
    for (std::size_t j = pivot; j < cols_; ++j) {
      if (v[j] != 0) row[j] = f.sub(row[j], f.mul(c, v[j]));
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Mat rref(const Field& field, std::span<const Vec> rows, std::size_t cols) {
  EchelonBasis basis(field, cols);
  for (const auto& r : rows) basis.insert(r);
  return basis.rows();
}

std::size_t rank(const Field& field, std::span<const Vec> rows, std::size_t cols) {
  EchelonBasis basis(field, cols);
  for (const auto& r : rows) {
    basis.insert(r);
    if (basis.rank() == cols) break;
  }
  return basis.rank();
}

Mat nullspace(const Field& field, std::span<const Vec> rows, std::size_t cols) {
  EchelonBasis basis(field, cols);
  for (const auto& r : rows) basis.insert(r);
  const auto& pivots = basis.pivots();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = field.neg(basis.rows()[i][free]);
    }
    out.push_back(std::move(v));
  }
  return rref(field, out, cols);
}

std::optional<Vec> solve_combination(const Field& field, std::span<const Vec> vectors,
                                     const Vec& target) {
  const std::size_t m = vectors.size();
  const std::size_t len = target.size();
  EchelonBasis basis(field, m + 1);
  for (std::size_t i = 0; i < len; ++i) {
    Vec row(m + 1, 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (vectors[j].size() != len) {
        throw Error(ErrorCode::kDimensionMismatch, "vector lengths differ");
      }
      row[j] = vectors[j][i];
    }
    row[m] = target[i];
    basis.insert(std::move(row));
  }
  Vec coeffs(m, 0);
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    const std::size_t pivot = basis.pivots()[i];
    if (pivot == m) return std::nullopt;
    coeffs[pivot] = basis.rows()[i][m];
  }
  return coeffs;
}

std::optional<Mat> inverse(const Field& field, const Mat& square) {
  const std::size_t n = square.size();
  EchelonBasis basis(field, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (square[i].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
    }
    Vec row(2 * n, 0);
    std::copy(square[i].begin(), square[i].end(), row.begin());
    row[n + i] = 1;
    basis.insert(std::move(row));
  }
  if (basis.rank() != n || basis.pivots().back() >= n) return std::nullopt;
  Mat inv(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(basis.rows()[i].begin() + n, basis.rows()[i].end(), inv[i].begin());
  }
  return inv;
}

Mat multiply(const Field& field, const Mat& a, const Mat& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  Mat out(rows, Vec(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix shapes do not compose");
    }
    for (std::size_t t = 0; t < inner; ++t) {
      const Elem x = a[i][t];
      if (x == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        out[i][j] = field.add(out[i][j], field.mul(x, b[t][j]));
      }
    }
  }
  return out;
}

Vec apply(const Field& field, const Mat& a, const Vec& v) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(field, a[i], v);
  return out;
}

Elem dot(const Field& field, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "dot product of unequal lengths");
  }
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s = field.add(s, field.mul(a[i], b[i]));
  }
  return s;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat out(a[0].size(), Vec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

Mat identity_matrix(std::size_t size) {
  Mat out(size, Vec(size, 0));
  for (std::size_t i = 0; i < size; ++i) out[i][i] = 1;
  return out;
}

}  // namespace pgtool
