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

#include "pgtool/projective.h"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace pgtool {

Point::Point(const Field& field, Vec v) : coords_(normalize_leading(field, std::move(v))) {}

Space::Space(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  if (n_ < 0) throw Error(ErrorCode::kParamOutOfRange, "projective dimension must be >= 0");
  const std::uint64_t q = field_->q();
  std::uint64_t count = 0;
  std::uint64_t power = 1;
  for (int i = 0; i <= n_; ++i) {
    count += power;
    if (i < n_) {
      if (power > std::numeric_limits<std::uint64_t>::max() / (4 * q)) {
        throw Error(ErrorCode::kSizeCapExceeded, "projective space too large");
      }
      power *= q;
    }
  }
  num_points_ = count;
}

Point Space::point(std::uint64_t index) const {
  if (index >= num_points_) throw Error(ErrorCode::kParamOutOfRange, "point index out of range");
  const std::uint64_t q = field_->q();
  int lead = n_;
  std::uint64_t count = 1;
  while (index >= count) {
    index -= count;
    --lead;
    count *= q;
  }
  Vec v(vec_size(), 0);
  v[lead] = 1;
  for (int pos = n_; pos > lead; --pos) {
    v[pos] = static_cast<Elem>(index % q);
    index /= q;
  }
  return Point(*field_, std::move(v));
}

std::uint64_t Space::index_of(const Point& p) const {
  check(p);
  const std::uint64_t q = field_->q();
  int lead = 0;
  while (p[lead] == 0) ++lead;
  std::uint64_t offset = 0;
  std::uint64_t count = 1;
  for (int j = n_; j > lead; --j) {
    offset += count;
    count *= q;
  }
  std::uint64_t tail = 0;
  for (int pos = lead + 1; pos <= n_; ++pos) tail = tail * q + p[pos];
  return offset + tail;
}

std::vector<Point> Space::points() const {
  if (num_points_ > kMaxEnumeratedPoints) {
    throw Error(ErrorCode::kSizeCapExceeded, "more than 10^6 points to enumerate");
  }
  std::vector<Point> out;
  out.reserve(num_points_);
  for (std::uint64_t i = 0; i < num_points_; ++i) out.push_back(point(i));
  return out;
}

void Space::check(const Point& p) const {
  if (p.size() != vec_size()) {
    throw Error(ErrorCode::kSpaceMismatch,
                "point has " + std::to_string(p.size()) + " coordinates, expected " +
                    std::to_string(vec_size()));
  }
  for (Elem x : p.coords()) {
    if (x >= field_->q()) throw Error(ErrorCode::kSpaceMismatch, "coordinate outside the field");
  }
}

Subspace::Subspace(Space space) : space_(std::move(space)) {}

Subspace::Subspace(Space space, Mat basis, std::vector<std::size_t> pivots)
    : space_(std::move(space)), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(const Space& space, std::span<const Point> points) {
  EchelonBasis basis(space.field(), space.vec_size());
  for (const auto& p : points) {
    space.check(p);
    basis.insert(p.coords());
  }
  return Subspace(space, basis.rows(), basis.pivots());
}

Subspace Subspace::span_vectors(const Space& space, std::span<const Vec> vectors) {
  EchelonBasis basis(space.field(), space.vec_size());
  for (const auto& v : vectors) basis.insert(v);
  return Subspace(space, basis.rows(), basis.pivots());
}

Subspace Subspace::whole(const Space& space) {
  const Mat id = identity_matrix(space.vec_size());
  return span_vectors(space, id);
}

Subspace Subspace::from_equations(const Space& space, std::span<const Vec> equations) {
  const Mat null = nullspace(space.field(), equations, space.vec_size());
  return span_vectors(space, null);
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != space_.vec_size()) {
    throw Error(ErrorCode::kSpaceMismatch, "vector length does not match the space");
  }
  const Field& f = space_.field();
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Elem c = r[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = pivots_[i]; j < r.size(); ++j) {
      if (basis_[i][j] != 0) r[j] = f.sub(r[j], f.mul(c, basis_[i][j]));
    }
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (!(other.space_ == space_)) throw Error(ErrorCode::kSpaceMismatch, "different spaces");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw Error(ErrorCode::kPointNotInSubspace, "vector not in subspace");
  Vec out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) out[i] = v[pivots_[i]];
  return out;
}

Vec Subspace::combine(const Vec& coeffs) const {
  if (coeffs.size() != basis_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "coefficient count differs from subspace rank");
  }
  const Field& f = space_.field();
  Vec out(space_.vec_size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = f.add(out[j], f.mul(coeffs[i], basis_[i][j]));
    }
  }
  return out;
}

Mat Subspace::equations() const {
  return nullspace(space_.field(), basis_, space_.vec_size());
}

std::vector<Point> Subspace::points() const {
  if (basis_.empty()) return {};
  const Space coeff_space(space_.field_ptr(), dim());
  std::vector<Point> out;
  out.reserve(coeff_space.num_points());
  for (std::uint64_t i = 0; i < coeff_space.num_points(); ++i) {
    out.emplace_back(space_.field(), combine(coeff_space.point(i).coords()));
  }
  return out;
}

Subspace join(const Subspace& a, const Subspace& b) {
  if (!(a.space() == b.space())) throw Error(ErrorCode::kSpaceMismatch, "join across spaces");
  Mat rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span_vectors(a.space(), rows);
}

Subspace meet(const Subspace& a, const Subspace& b) {
  if (!(a.space() == b.space())) throw Error(ErrorCode::kSpaceMismatch, "meet across spaces");
  Mat eqs = a.equations();
  const Mat eb = b.equations();
  eqs.insert(eqs.end(), eb.begin(), eb.end());
  return Subspace::from_equations(a.space(), eqs);
}

std::vector<Subspace> hyperplanes(const Space& space) {
  std::vector<Subspace> out;
  out.reserve(space.num_points());
  for (std::uint64_t i = 0; i < space.num_points(); ++i) {
    const Vec eq = space.point(i).coords();
    out.push_back(Subspace::from_equations(space, std::span<const Vec>(&eq, 1)));
  }
  return out;
}

std::vector<Subspace> all_lines(const Space& space) {
  const auto pts = space.points();
  std::vector<Subspace> out;
  // A pair (a, b) starts a new line exactly when no earlier line holds both.
  for (std::size_t a = 0; a < pts.size(); ++a) {
    std::vector<bool> seen(pts.size(), false);
    for (const auto& line : out) {
      if (line.contains(pts[a])) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
          if (line.contains(pts[b])) seen[b] = true;
        }
      }
    }
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (seen[b]) continue;
      const Point ends[2] = {pts[a], pts[b]};
      Subspace line = Subspace::span(space, ends);
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        if (line.contains(pts[c])) seen[c] = true;
      }
      out.push_back(std::move(line));
    }
  }
  return out;
}

Subspace standard_complement(const Subspace& s) {
  const Space& space = s.space();
  EchelonBasis basis(space.field(), space.vec_size());
  for (const auto& row : s.basis()) basis.insert(row);
  Mat added;
  for (std::size_t i = 0; i < space.vec_size(); ++i) {
    Vec e(space.vec_size(), 0);
    e[i] = 1;
    if (basis.insert(e)) added.push_back(std::move(e));
  }
  return Subspace::span_vectors(space, added);
}

std::vector<Subspace> lines_through(const Point& p, const Subspace& inside) {
  if (!inside.contains(p)) throw Error(ErrorCode::kPointNotInSubspace, "point not in subspace");
  if (inside.dim() < 1) throw Error(ErrorCode::kNotALine, "subspace has no lines");
  const Space& space = inside.space();
  EchelonBasis seen(space.field(), space.vec_size());
  seen.insert(p.coords());
  Mat others;
  for (const auto& row : inside.basis()) {
    if (seen.insert(row)) others.push_back(row);
  }
  // Lines through p correspond to points of span(others).
  const Subspace rest = Subspace::span_vectors(space, others);
  std::vector<Subspace> out;
  for (const auto& w : rest.points()) {
    const Vec pair[2] = {p.coords(), w.coords()};
    out.push_back(Subspace::span_vectors(space, pair));
  }
  return out;
}

std::vector<Point> line_points(const Subspace& line) {
  if (line.dim() != 1) throw Error(ErrorCode::kNotALine, "subspace is not a line");
  return line.points();
}

QuotientPoint quotient_point(const Subspace& base, const Point& x) {
  if (base.contains(x)) throw Error(ErrorCode::kPointInBase, "point lies in the base subspace");
  const Point single[1] = {x};
  return join(base, Subspace::span(base.space(), single));
}

bool is_frame(const Space& space, std::span<const Point> points) {
  const std::size_t m1 = space.vec_size();
  if (points.size() != m1 + 1) return false;
  for (std::size_t skip = 0; skip < points.size(); ++skip) {
    Mat rows;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i != skip) rows.push_back(points[i].coords());
    }
    if (rank(space.field(), rows, m1) != m1) return false;
  }
  return true;
}

Frame::Frame(const Space& space, std::vector<Point> points)
    : space_(space), points_(std::move(points)) {
  for (const auto& p : points_) space_.check(p);
  if (!is_frame(space_, points_)) throw Error(ErrorCode::kNotAFrame, "points do not form a frame");
  const std::size_t m1 = space_.vec_size();
  Mat reps;
  for (std::size_t i = 0; i < m1; ++i) reps.push_back(points_[i].coords());
  const auto c = solve_combination(space_.field(), reps, points_.back().coords());
  if (!c) throw Error(ErrorCode::kSingularSystem, "frame unit point not in span");
  const Field& f = space_.field();
  for (std::size_t i = 0; i < m1; ++i) {
    for (auto& x : reps[i]) x = f.mul(x, (*c)[i]);
  }
  scaled_ = std::move(reps);
}

Frame Frame::standard(const Space& space) {
  std::vector<Point> pts;
  const Mat id = identity_matrix(space.vec_size());
  for (const auto& e : id) pts.emplace_back(space.field(), e);
  pts.emplace_back(space.field(), Vec(space.vec_size(), 1));
  return Frame(space, std::move(pts));
}

Vec Frame::coordinates(const Point& x) const {
  space_.check(x);
  const auto c = solve_combination(space_.field(), scaled_, x.coords());
  if (!c) throw Error(ErrorCode::kSingularSystem, "point not expressible in frame basis");
  return normalize_leading(space_.field(), *c);
}

Vec apply_automorphism(const Field& field, FieldAutomorphism alpha, const Vec& v) {
  if (alpha.exponent % field.k() == 0) return v;
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = field.frobenius(v[i], alpha.exponent);
  return out;
}

SemilinearMap::SemilinearMap(FieldPtr field, Mat matrix, FieldAutomorphism alpha)
    : field_(std::move(field)), matrix_(std::move(matrix)), alpha_(alpha) {
  alpha_.exponent = ((alpha_.exponent % field_->k()) + field_->k()) % field_->k();
  if (matrix_.empty() || !pgtool::inverse(*field_, matrix_)) {
    throw Error(ErrorCode::kSingularMatrix, "semilinear map needs an invertible matrix");
  }
}

SemilinearMap SemilinearMap::identity(FieldPtr field, std::size_t size) {
  return SemilinearMap(std::move(field), identity_matrix(size), {0});
}

Vec SemilinearMap::apply(const Vec& v) const {
  if (v.size() != matrix_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length does not match the map");
  }
  return pgtool::apply(*field_, matrix_, apply_automorphism(*field_, alpha_, v));
}

Point SemilinearMap::apply(const Point& p) const { return Point(*field_, apply(p.coords())); }

Subspace SemilinearMap::apply(const Subspace& s) const {
  Mat images;
  for (const auto& row : s.basis()) images.push_back(apply(row));
  return Subspace::span_vectors(s.space(), images);
}

SemilinearMap SemilinearMap::then(const SemilinearMap& next) const {
  if (next.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "composing unequal sizes");
  Mat twisted = matrix_;
  for (auto& row : twisted) row = apply_automorphism(*field_, next.alpha_, row);
  return SemilinearMap(field_, multiply(*field_, next.matrix_, twisted),
                       compose(*field_, alpha_, next.alpha_));
}

SemilinearMap SemilinearMap::inverse() const {
  Mat inv = *pgtool::inverse(*field_, matrix_);
  const FieldAutomorphism back = pgtool::inverse(*field_, alpha_);
  for (auto& row : inv) row = apply_automorphism(*field_, back, row);
  return SemilinearMap(field_, std::move(inv), back);
}

}  // namespace pgtool
