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

#ifndef PGTOOL_ARCS_H_
#define PGTOOL_ARCS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pgtool/projective.h"
#include "pgtool/quadrics.h"

namespace pgtool {

// A point set inside a plane of some PG(m,q). The plane is coordinatized by
// its reduced basis, which turns every point into a point of PG(2,q).
class PlaneArc {
 public:
  PlaneArc(Subspace plane, std::vector<Point> points);

  const Subspace& plane() const { return plane_; }
  const std::vector<Point>& points() const { return points_; }
  bool contains(const Point& p) const;
  // The points expressed in the plane's own PG(2,q) coordinates.
  std::vector<Point> plane_coordinates() const;
  Space plane_space() const { return Space(plane_.space().field_ptr(), 2); }

 private:
  Subspace plane_;
  std::vector<Point> points_;  // sorted, unique
};

bool is_arc(const Subspace& plane, std::span<const Point> points);
// Arc with q+1 points.
bool is_oval(const Subspace& plane, std::span<const Point> points);

// Lines m of the plane through p with m meeting the arc only in p.
std::vector<Subspace> unisecants_at(const PlaneArc& arc, const Point& p);

// A form (in plane coordinates) whose zero set is exactly the arc, provided
// the arc is a (q+1)-arc; std::nullopt otherwise.
std::optional<QuadraticForm> regular_conic_witness(const PlaneArc& arc);
inline bool is_regular_conic(const PlaneArc& arc) {
  return regular_conic_witness(arc).has_value();
}

// Common point of the unique unisecants at p1 and p2.
Point tangent_meet(const PlaneArc& arc, const Point& p1, const Point& p2);

// {X : {X} = x meet sigma(x), x a line through p0} for a collineation sigma
// of PG(2,q) moving p0 to p2 != p0 and not fixing the line p0 p2.
std::vector<Point> pencil_meet_locus(const SemilinearMap& sigma, const Point& p0);

// True when some three distinct points of the set are collinear.
bool has_collinear_triple(const Field& field, std::span<const Point> points);

struct OvalScanReport {
  int q = 0;
  std::uint64_t ovals = 0;
  std::uint64_t conics = 0;
  std::vector<std::vector<Point>> non_conic_ovals;
};

// Every oval of PG(2,q), q <= 5, tested for being a conic.
OvalScanReport scan_ovals(int q);

}  // namespace pgtool

#endif  // PGTOOL_ARCS_H_
