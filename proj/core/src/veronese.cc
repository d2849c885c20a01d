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

#include "pgtool/veronese.h"

namespace pgtool {

std::int64_t delta(int t) {
  if (t < 0) throw Error(ErrorCode::kParamOutOfRange, "delta needs t >= 0");
  const std::int64_t s = t;
  return (s + 2) * (s + 1) / 2;
}

Veronese::Veronese(const Space& source)
    : source_(source),
      target_(source.field_ptr(), static_cast<int>(delta(source.n()) - 1)) {
  const int n = source_.n();
  index_.assign(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      index_[i][j] = index_[j][i] = pairs_.size();
      pairs_.emplace_back(i, j);
    }
  }
}

std::size_t Veronese::flat_index(int i, int j) const { return index_.at(i).at(j); }

Vec Veronese::monomials(const Vec& x) const {
  if (x.size() != source_.vec_size()) {
    throw Error(ErrorCode::kDimensionMismatch, "point dimension does not match the source");
  }
  const Field& f = source_.field();
  Vec y(pairs_.size());
  for (std::size_t t = 0; t < pairs_.size(); ++t) {
    y[t] = f.mul(x[pairs_[t].first], x[pairs_[t].second]);
  }
  return y;
}

Point Veronese::rho(const Point& x) const {
  Vec y = monomials(x.coords());
  source_.check(x);
  return Point(source_.field(), std::move(y));
}

std::optional<Point> Veronese::preimage(const Point& y) const {
  if (y.size() != target_.vec_size()) {
    throw Error(ErrorCode::kDimensionMismatch, "point dimension does not match the target");
  }
  target_.check(y);
  const Field& f = source_.field();
  const int n = source_.n();
  // X is proportional to the row (y_i0, ..., y_in) of any nonzero diagonal y_ii.
  for (int i = 0; i <= n; ++i) {
    if (y[flat_index(i, i)] == 0) continue;
    const Elem yii = y[flat_index(i, i)];
    for (int a = 0; a <= n; ++a) {
      for (int b = a; b <= n; ++b) {
        const Elem lhs = f.mul(y[flat_index(a, b)], yii);
        const Elem rhs = f.mul(y[flat_index(a, i)], y[flat_index(b, i)]);
        if (lhs != rhs) return std::nullopt;
      }
    }
    Vec x(n + 1);
    for (int a = 0; a <= n; ++a) x[a] = y[flat_index(i, a)];
    // The consistency check makes rho(x) proportional to y, up to y_ii.
    return Point(f, std::move(x));
  }
  return std::nullopt;
}

}  // namespace pgtool
