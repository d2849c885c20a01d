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

#include "pgtool/arcs.h"

#include <algorithm>
#include <set>

#include "pgtool/parallel.h"

namespace pgtool {
namespace {

Elem det3(const Field& f, const Vec& a, const Vec& b, const Vec& c) {
  auto m = [&](Elem x, Elem y) { return f.mul(x, y); };
  const Elem t0 = m(a[0], f.sub(m(b[1], c[2]), m(b[2], c[1])));
  const Elem t1 = m(a[1], f.sub(m(b[0], c[2]), m(b[2], c[0])));
  const Elem t2 = m(a[2], f.sub(m(b[0], c[1]), m(b[1], c[0])));
  return f.add(f.sub(t0, t1), t2);
}

std::vector<Point> sorted_unique(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

PlaneArc::PlaneArc(Subspace plane, std::vector<Point> points)
    : plane_(std::move(plane)), points_(sorted_unique(std::move(points))) {
  if (plane_.dim() != 2) throw Error(ErrorCode::kDimensionMismatch, "arc ambient is not a plane");
  for (const auto& p : points_) {
    plane_.space().check(p);
    if (!plane_.contains(p)) throw Error(ErrorCode::kPointOutsidePlane, "point outside the plane");
  }
}

bool PlaneArc::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::vector<Point> PlaneArc::plane_coordinates() const {
  std::vector<Point> out;
  out.reserve(points_.size());
  const Field& f = plane_.space().field();
  for (const auto& p : points_) out.emplace_back(f, plane_.coordinates(p.coords()));
  return out;
}

bool has_collinear_triple(const Field& field, std::span<const Point> points) {
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      for (std::size_t c = b + 1; c < points.size(); ++c) {
        const Mat rows = {points[a].coords(), points[b].coords(), points[c].coords()};
        if (rank(field, rows, points[a].size()) < 3) return true;
      }
    }
  }
  return false;
}

bool is_arc(const Subspace& plane, std::span<const Point> points) {
  const PlaneArc arc(plane, std::vector<Point>(points.begin(), points.end()));
  const auto coords = arc.plane_coordinates();
  const Field& f = plane.space().field();
  for (std::size_t a = 0; a < coords.size(); ++a) {
    for (std::size_t b = a + 1; b < coords.size(); ++b) {
      for (std::size_t c = b + 1; c < coords.size(); ++c) {
        if (det3(f, coords[a].coords(), coords[b].coords(), coords[c].coords()) == 0) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_oval(const Subspace& plane, std::span<const Point> points) {
  const std::set<Point> distinct(points.begin(), points.end());
  return distinct.size() == plane.space().field().q() + 1u && is_arc(plane, points);
}

std::vector<Subspace> unisecants_at(const PlaneArc& arc, const Point& p) {
  if (!arc.contains(p)) throw Error(ErrorCode::kPointNotOnArc, "point is not on the arc");
  std::vector<Subspace> out;
  for (auto& line : lines_through(p, arc.plane())) {
    const auto hits = std::count_if(arc.points().begin(), arc.points().end(),
                                    [&](const Point& x) { return line.contains(x); });
    if (hits == 1) out.push_back(std::move(line));
  }
  return out;
}

std::optional<QuadraticForm> regular_conic_witness(const PlaneArc& arc) {
  const Space plane = arc.plane_space();
  const Field& f = plane.field();
  if (arc.points().size() != f.q() + 1u) return std::nullopt;
  const auto coords = arc.plane_coordinates();
  for (std::size_t a = 0; a < coords.size(); ++a) {
    for (std::size_t b = a + 1; b < coords.size(); ++b) {
      for (std::size_t c = b + 1; c < coords.size(); ++c) {
        if (det3(f, coords[a].coords(), coords[b].coords(), coords[c].coords()) == 0) {
          return std::nullopt;
        }
      }
    }
  }
  const Veronese veronese(plane);
  Mat rows;
  for (const auto& x : coords) rows.push_back(veronese.monomials(x.coords()));
  const Mat forms = nullspace(f, rows, veronese.target().vec_size());
  if (forms.empty()) return std::nullopt;
  const std::set<Point> wanted(coords.begin(), coords.end());
  const auto plane_points = plane.points();
  // Every form in the span vanishes on the arc; look for one vanishing nowhere else.
  for (const auto& candidate : Subspace::span_vectors(veronese.target(), forms).points()) {
    const QuadraticForm form(plane, candidate.coords());
    std::size_t zeros = 0;
    bool exact = true;
    for (const auto& x : plane_points) {
      if (form.evaluate(f, x) != 0) continue;
      ++zeros;
      if (!wanted.count(x)) {
        exact = false;
        break;
      }
    }
    if (exact && zeros == wanted.size()) return form;
  }
  return std::nullopt;
}

Point tangent_meet(const PlaneArc& arc, const Point& p1, const Point& p2) {
  if (p1 == p2) throw Error(ErrorCode::kParamOutOfRange, "tangent_meet needs two distinct points");
  const auto t1 = unisecants_at(arc, p1);
  const auto t2 = unisecants_at(arc, p2);
  if (t1.size() != 1 || t2.size() != 1) {
    throw Error(ErrorCode::kNoUniqueUnisecant, "arc has no unique unisecant at a given point");
  }
  const Subspace m = meet(t1[0], t2[0]);
  if (m.dim() != 0) {
    throw Error(ErrorCode::kParallelLinesImpossible, "two tangents failed to meet in a point");
  }
  return Point(arc.plane().space().field(), m.basis()[0]);
}

std::vector<Point> pencil_meet_locus(const SemilinearMap& sigma, const Point& p0) {
  if (sigma.size() != 3) throw Error(ErrorCode::kDimensionMismatch, "sigma must act on PG(2,q)");
  const Space plane(sigma.field_ptr(), 2);
  plane.check(p0);
  const Point p2 = sigma.apply(p0);
  if (p2 == p0) throw Error(ErrorCode::kSigmaFixesP0, "sigma fixes p0");
  const Point ends[2] = {p0, p2};
  const Subspace base_line = Subspace::span(plane, ends);
  if (sigma.apply(base_line) == base_line) {
    throw Error(ErrorCode::kSigmaFixesLine, "sigma fixes the line p0 p2");
  }
  std::vector<Point> out;
  for (const auto& x : lines_through(p0, Subspace::whole(plane))) {
    const Subspace m = meet(x, sigma.apply(x));
    if (m.dim() == 0) out.emplace_back(plane.field(), m.basis()[0]);
  }
  return sorted_unique(std::move(out));
}

OvalScanReport scan_ovals(int q) {
  const FieldPtr field = field_of_order(static_cast<std::uint64_t>(q));
  if (q > 5) throw Error(ErrorCode::kSizeCapExceeded, "oval scan is limited to q <= 5");
  const Space plane(field, 2);
  const auto pts = plane.points();
  const std::size_t count = pts.size();  // at most 31, so masks fit in 64 bits
  std::vector<std::vector<std::uint64_t>> line_mask(count, std::vector<std::uint64_t>(count, 0));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      const Point ends[2] = {pts[a], pts[b]};
      const Subspace line = Subspace::span(plane, ends);
      std::uint64_t mask = 0;
      for (std::size_t c = 0; c < count; ++c) {
        if (line.contains(pts[c])) mask |= std::uint64_t{1} << c;
      }
      line_mask[a][b] = line_mask[b][a] = mask;
    }
  }
  const std::size_t oval_size = static_cast<std::size_t>(q) + 1;
  const Subspace whole = Subspace::whole(plane);

  struct Partial {
    std::uint64_t ovals = 0;
    std::uint64_t conics = 0;
    std::vector<std::vector<Point>> non_conic;
  };
  // Subsets are generated in increasing index order; a point is admissible when
  // it is not on a secant of the points chosen so far, so exactly the arcs are
  // visited and each (q+1)-arc once.
  std::vector<Partial> partial(count);
  parallel_for(count, [&](std::size_t first) {
    Partial& out = partial[first];
    std::vector<std::size_t> chosen{first};
    std::vector<std::uint64_t> blocked{std::uint64_t{1} << first};
    auto visit = [&](auto&& self, std::size_t from) -> void {
      if (chosen.size() == oval_size) {
        ++out.ovals;
        std::vector<Point> oval;
        for (auto i : chosen) oval.push_back(pts[i]);
        if (is_regular_conic(PlaneArc(whole, oval))) {
          ++out.conics;
        } else {
          out.non_conic.push_back(std::move(oval));
        }
        return;
      }
      for (std::size_t c = from; c < count; ++c) {
        if (blocked.back() >> c & 1u) continue;
        std::uint64_t next = blocked.back() | (std::uint64_t{1} << c);
        for (auto i : chosen) next |= line_mask[i][c];
        chosen.push_back(c);
        blocked.push_back(next);
        self(self, c + 1);
        chosen.pop_back();
        blocked.pop_back();
      }
    };
    visit(visit, first + 1);
  });
  OvalScanReport report;
  report.q = q;
  for (auto& part : partial) {
    report.ovals += part.ovals;
    report.conics += part.conics;
    for (auto& o : part.non_conic) report.non_conic_ovals.push_back(std::move(o));
  }
  return report;
}

}  // namespace pgtool
