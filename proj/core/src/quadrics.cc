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

#include "pgtool/quadrics.h"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace pgtool {

QuadraticForm::QuadraticForm(const Space& space, Vec coeffs) : n_(space.n()) {
  if (coeffs.size() != static_cast<std::size_t>(delta(space.n()))) {
    throw Error(ErrorCode::kDimensionMismatch, "form needs C(n+2,2) coefficients");
  }
  coeffs_ = normalize_leading(space.field(), std::move(coeffs));
}

QuadraticForm QuadraticForm::no_form(const Space& space) { return QuadraticForm(space.n()); }

Elem QuadraticForm::evaluate(const Field& field, const Point& x) const {
  if (x.size() != static_cast<std::size_t>(n_) + 1) {
    throw Error(ErrorCode::kDimensionMismatch, "point dimension does not match the form");
  }
  if (is_no_form()) return 0;
  Elem sum = 0;
  std::size_t t = 0;
  for (int i = 0; i <= n_; ++i) {
    for (int j = i; j <= n_; ++j, ++t) {
      if (coeffs_[t] == 0) continue;
      sum = field.add(sum, field.mul(coeffs_[t], field.mul(x[i], x[j])));
    }
  }
  return sum;
}

std::vector<Point> zero_set(const Space& space, const QuadraticForm& form) {
  if (form.n() != space.n()) throw Error(ErrorCode::kDimensionMismatch, "form/space mismatch");
  std::vector<Point> out;
  for (std::uint64_t i = 0; i < space.num_points(); ++i) {
    Point x = space.point(i);
    if (form.vanishes_at(space.field(), x)) out.push_back(std::move(x));
  }
  return out;
}

ClosureEngine::ClosureEngine(const Space& space)
    : space_(space), veronese_(space), points_(space.points()) {
  rho_.reserve(points_.size());
  for (const auto& p : points_) rho_.push_back(veronese_.monomials(p.coords()));
}

PointIndex ClosureEngine::index_of(const Point& p) const {
  return static_cast<PointIndex>(space_.index_of(p));
}

std::vector<PointIndex> ClosureEngine::members(const EchelonBasis& rho_span) const {
  std::vector<PointIndex> out;
  if (rho_span.rank() == 0) return out;
  for (PointIndex i = 0; i < rho_.size(); ++i) {
    if (rho_span.contains(rho_[i])) out.push_back(i);
  }
  return out;
}

std::vector<PointIndex> ClosureEngine::closure(std::span<const PointIndex> m) const {
  EchelonBasis basis(space_.field(), veronese_.target().vec_size());
  for (PointIndex i : m) basis.insert(rho_.at(i));
  return members(basis);
}

Mat ClosureEngine::vanishing_forms(std::span<const PointIndex> m) const {
  Mat rows;
  rows.reserve(m.size());
  for (PointIndex i : m) rows.push_back(rho_.at(i));
  return nullspace(space_.field(), rows, veronese_.target().vec_size());
}

std::vector<PointIndex> ClosureEngine::closure_by_forms(std::span<const PointIndex> m) const {
  const Mat forms = vanishing_forms(m);
  std::vector<PointIndex> out;
  for (PointIndex i = 0; i < rho_.size(); ++i) {
    const bool on_all = std::all_of(forms.begin(), forms.end(), [&](const Vec& f) {
      return dot(space_.field(), f, rho_[i]) == 0;
    });
    if (on_all) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<PointIndex> to_indices(const ClosureEngine& engine, std::span<const Point> m) {
  std::vector<PointIndex> out;
  out.reserve(m.size());
  for (const auto& p : m) out.push_back(engine.index_of(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point> to_points(const ClosureEngine& engine, std::span<const PointIndex> idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (PointIndex i : idx) out.push_back(engine.points()[i]);
  return out;
}

}  // namespace

ClosedSet quadratic_closure(const Space& space, std::span<const Point> m) {
  const ClosureEngine engine(space);
  const auto idx = to_indices(engine, m);
  return {to_points(engine, engine.closure(idx)), engine.vanishing_forms(idx)};
}

std::vector<Point> closure_by_forms(const Space& space, std::span<const Point> m) {
  const ClosureEngine engine(space);
  return to_points(engine, engine.closure_by_forms(to_indices(engine, m)));
}

bool is_closed(const Space& space, std::span<const Point> m) {
  const ClosureEngine engine(space);
  const auto idx = to_indices(engine, m);
  return engine.closure(idx) == idx;
}

int longest_closed_chain(const Space& space, std::span<const Point> m) {
  const ClosureEngine engine(space);
  // The search closes sets through the vanishing-forms route so that it stays
  // independent of the Veronese span it is compared against.
  const auto top = engine.closure_by_forms(to_indices(engine, m));
  if (top.size() > kChainOracleMaxPoints) {
    throw Error(ErrorCode::kOracleSizeCap, "closure has more than 13 points");
  }
  const std::uint32_t full = (1u << top.size()) - 1;
  std::unordered_map<std::uint32_t, std::uint32_t> closure_cache;
  auto close_mask = [&](std::uint32_t mask) {
    auto it = closure_cache.find(mask);
    if (it != closure_cache.end()) return it->second;
    std::vector<PointIndex> members;
    for (std::size_t b = 0; b < top.size(); ++b) {
      if (mask >> b & 1u) members.push_back(top[b]);
    }
    std::uint32_t result = 0;
    for (PointIndex g : engine.closure_by_forms(members)) {
      const auto pos = std::lower_bound(top.begin(), top.end(), g) - top.begin();
      result |= 1u << pos;  // closures of subsets stay inside the top set
    }
    closure_cache.emplace(mask, result);
    return result;
  };
  // steps[mask] = longest strictly increasing path of closed sets mask -> full.
  std::unordered_map<std::uint32_t, int> steps;
  std::function<int(std::uint32_t)> longest = [&](std::uint32_t mask) -> int {
    if (mask == full) return 0;
    auto it = steps.find(mask);
    if (it != steps.end()) return it->second;
    int best = 0;
    for (std::size_t b = 0; b < top.size(); ++b) {
      if (mask >> b & 1u) continue;
      best = std::max(best, 1 + longest(close_mask(mask | (1u << b))));
    }
    steps.emplace(mask, best);
    return best;
  };
  return longest(0) - 1;
}

}  // namespace pgtool
