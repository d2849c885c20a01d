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

#include <gtest/gtest.h>

#include <set>

#include "oracles.h"
#include "pgtool/arcs.h"
#include "pgtool/generators.h"
#include "pgtool/veronese.h"

namespace pgtool {
namespace {

Space pg(int n, int q) { return Space(field_of_order(q), n); }
Point pt(const Space& s, Vec v) { return Point(s.field(), std::move(v)); }

template <typename Fn>
ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kParseError;
}

// The conic y1^2 = y0 y2.
std::vector<Point> standard_conic(const Space& s) {
  std::vector<Point> out;
  for (Elem t = 0; t < s.field().q(); ++t) out.push_back(pt(s, {1, t, s.field().mul(t, t)}));
  out.push_back(pt(s, {0, 0, 1}));
  return out;
}

TEST(Arcs, Examples) {
  const Space s = pg(2, 3);
  const Subspace plane = Subspace::whole(s);
  const std::vector<Point> triangle = {pt(s, {1, 0, 0}), pt(s, {0, 1, 0}), pt(s, {0, 0, 1})};
  EXPECT_TRUE(is_arc(plane, triangle));
  EXPECT_FALSE(is_oval(plane, triangle));
  EXPECT_TRUE(is_oval(plane, standard_conic(s)));
  const std::vector<Point> line = {pt(s, {1, 0, 0}), pt(s, {0, 1, 0}), pt(s, {1, 1, 0})};
  EXPECT_FALSE(is_arc(plane, line));
}

TEST(Arcs, PointsOutsideThePlaneAreRejected) {
  const Space s = pg(3, 3);
  const std::vector<Point> gens = {pt(s, {1, 0, 0, 0}), pt(s, {0, 1, 0, 0}), pt(s, {0, 0, 1, 0})};
  const Subspace plane = Subspace::span(s, gens);
  const std::vector<Point> pts = {pt(s, {0, 0, 0, 1})};
  EXPECT_EQ(code_of([&] { is_arc(plane, pts); }), ErrorCode::kPointOutsidePlane);
  EXPECT_EQ(code_of([&] { PlaneArc(Subspace::whole(s), pts); }), ErrorCode::kDimensionMismatch);
}

TEST(Arcs, ArcTestMatchesCollinearityOracle) {
  const Space s = pg(2, 4);
  const Subspace plane = Subspace::whole(s);
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<Point> chosen;
    const auto size = 3 + rng.below(4);
    while (chosen.size() < size) chosen.insert(random_point(s, rng));
    const std::vector<Point> pts(chosen.begin(), chosen.end());
    bool collinear = false;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        for (std::size_t c = b + 1; c < pts.size(); ++c) {
          collinear = collinear || oracle::collinear(s.field(), pts[a], pts[b], pts[c]);
        }
      }
    }
    EXPECT_EQ(is_arc(plane, pts), !collinear);
    EXPECT_EQ(has_collinear_triple(s.field(), pts), collinear);
  }
}

TEST(Unisecants, ConicInPg23) {
  const Space s = pg(2, 3);
  const PlaneArc arc(Subspace::whole(s), standard_conic(s));
  const auto tangents = unisecants_at(arc, pt(s, {1, 0, 0}));
  ASSERT_EQ(tangents.size(), 1u);
  // y2 = 0
  const std::vector<Point> expected = {pt(s, {1, 0, 0}), pt(s, {0, 1, 0})};
  EXPECT_TRUE(tangents[0] == Subspace::span(s, expected));
  EXPECT_EQ(code_of([&] { unisecants_at(arc, pt(s, {0, 1, 0})); }), ErrorCode::kPointNotOnArc);
}

TEST(Unisecants, TriangleInTheFanoPlane) {
  const Space s = pg(2, 2);
  const std::vector<Point> triangle = {pt(s, {1, 0, 0}), pt(s, {0, 1, 0}), pt(s, {0, 0, 1})};
  const PlaneArc arc(Subspace::whole(s), triangle);
  for (const auto& p : triangle) EXPECT_EQ(unisecants_at(arc, p).size(), 1u);
}

TEST(Unisecants, ConicTangentsPassThroughTheNucleusInEvenCharacteristic) {
  const Space s = pg(2, 4);
  const PlaneArc arc(Subspace::whole(s), standard_conic(s));
  for (const auto& p : arc.points()) {
    const auto t = unisecants_at(arc, p);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_TRUE(t[0].contains(pt(s, {0, 1, 0})));
  }
}

TEST(Unisecants, EveryConicPointHasExactlyOne) {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Space s = pg(2, q);
    const PlaneArc arc(Subspace::whole(s), standard_conic(s));
    for (const auto& p : arc.points()) EXPECT_EQ(unisecants_at(arc, p).size(), 1u) << q;
  }
}

TEST(RegularConic, StandardConics) {
  for (int q : {2, 3, 4}) {
    const Space s = pg(2, q);
    const PlaneArc arc(Subspace::whole(s), standard_conic(s));
    const auto witness = regular_conic_witness(arc);
    ASSERT_TRUE(witness.has_value());
    EXPECT_EQ(zero_set(s, *witness).size(), static_cast<std::size_t>(q) + 1);
  }
}

TEST(RegularConic, WrongSizeIsRejected) {
  const Space s = pg(2, 5);
  const auto conic = standard_conic(s);
  for (std::size_t skip_a = 0; skip_a < conic.size(); ++skip_a) {
    for (std::size_t skip_b = skip_a + 1; skip_b < conic.size(); ++skip_b) {
      std::vector<Point> four;
      for (std::size_t i = 0; i < conic.size(); ++i) {
        if (i != skip_a && i != skip_b) four.push_back(conic[i]);
      }
      EXPECT_FALSE(is_regular_conic(PlaneArc(Subspace::whole(s), four)));
    }
  }
}

TEST(RegularConic, NucleusSwapOvalInPg28IsNotAConic) {
  const Space s = pg(2, 8);
  auto oval = standard_conic(s);
  oval.erase(oval.begin());       // drop (1,0,0)
  oval.push_back(pt(s, {0, 1, 0}));  // add the nucleus
  const Subspace plane = Subspace::whole(s);
  EXPECT_TRUE(is_oval(plane, oval));
  EXPECT_FALSE(is_regular_conic(PlaneArc(plane, oval)));
}

TEST(RegularConic, DoesNotDependOnThePlaneBasis) {
  const Space s = pg(3, 3);
  Rng rng(19);
  const Space plane2 = pg(2, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat a = random_invertible(s.field(), 4, rng);
    auto embed = [&](const Point& x) {
      Vec v(4, 0);
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 3; ++c) v[r] = s.field().add(v[r], s.field().mul(a[r][c], x[c]));
      }
      return Point(s.field(), v);
    };
    std::vector<Point> conic, non_conic;
    for (const auto& x : standard_conic(plane2)) conic.push_back(embed(x));
    const std::vector<Point> gens = {embed(pt(plane2, {1, 0, 0})), embed(pt(plane2, {0, 1, 0})),
                                     embed(pt(plane2, {0, 0, 1}))};
    const Subspace plane = Subspace::span(s, gens);
    EXPECT_TRUE(is_regular_conic(PlaneArc(plane, conic)));
    non_conic = conic;
    non_conic.pop_back();
    EXPECT_FALSE(is_regular_conic(PlaneArc(plane, non_conic)));
  }
}

TEST(TangentMeet, VeroneseLineImage) {
  for (int q : {2, 3, 4, 5}) {
    const Space s = pg(2, q);
    const Veronese v(s);
    const std::vector<Point> ends = {pt(s, {1, 0, 0}), pt(s, {0, 1, 0})};
    std::vector<Point> images;
    for (const auto& x : Subspace::span(s, ends).points()) images.push_back(v.rho(x));
    const PlaneArc arc(Subspace::span(v.target(), images), images);
    EXPECT_EQ(tangent_meet(arc, v.rho(ends[0]), v.rho(ends[1])),
              pt(v.target(), {0, 1, 0, 0, 0, 0}));
  }
}

TEST(TangentMeet, ConicExamplesAndSymmetry) {
  const Space s3 = pg(2, 3);
  const PlaneArc c3(Subspace::whole(s3), standard_conic(s3));
  EXPECT_EQ(tangent_meet(c3, pt(s3, {1, 0, 0}), pt(s3, {0, 0, 1})), pt(s3, {0, 1, 0}));
  for (const auto& a : c3.points()) {
    for (const auto& b : c3.points()) {
      if (a == b) continue;
      const Point m = tangent_meet(c3, a, b);
      EXPECT_EQ(m, tangent_meet(c3, b, a));
      const std::vector<Point> secant = {a, b};
      EXPECT_FALSE(Subspace::span(s3, secant).contains(m));
    }
  }
  const Space s4 = pg(2, 4);
  const PlaneArc c4(Subspace::whole(s4), standard_conic(s4));
  for (const auto& a : c4.points()) {
    for (const auto& b : c4.points()) {
      if (!(a == b)) {
        EXPECT_EQ(tangent_meet(c4, a, b), pt(s4, {0, 1, 0}));
      }
    }
  }
}

TEST(TangentMeet, NeedsUniqueUnisecants) {
  const Space s = pg(2, 3);
  const std::vector<Point> triangle = {pt(s, {1, 0, 0}), pt(s, {0, 1, 0}), pt(s, {0, 0, 1})};
  const PlaneArc arc(Subspace::whole(s), triangle);
  EXPECT_EQ(code_of([&] { tangent_meet(arc, triangle[0], triangle[1]); }),
            ErrorCode::kNoUniqueUnisecant);
}

// Brute-force x meet sigma(x) over the pencil of lines through p0.
std::set<Point> locus_oracle(const Space& s, const SemilinearMap& sigma, const Point& p0) {
  std::set<Point> out;
  std::set<std::set<Point>> lines;
  for (const auto& x : s.points()) {
    if (x == p0) continue;
    std::set<Point> line;
    for (const auto& y : s.points()) {
      if (oracle::collinear(s.field(), p0, x, y)) line.insert(y);
    }
    lines.insert(line);
  }
  for (const auto& line : lines) {
    std::set<Point> image;
    for (const auto& y : line) image.insert(sigma.apply(y));
    std::vector<Point> common;
    for (const auto& y : line) {
      if (image.count(y)) common.push_back(y);
    }
    if (common.size() == 1) out.insert(common[0]);
  }
  return out;
}

TEST(PencilMeetLocus, MatchesBruteForce) {
  for (int q : {3, 4, 9}) {
    const Space s = pg(2, q);
    const Point p0 = pt(s, {1, 0, 0});
    Rng rng(static_cast<std::uint64_t>(q));
    int checked = 0;
    while (checked < 10) {
      const auto sigma = random_semilinear(s.field_ptr(), 3, rng);
      std::vector<Point> locus;
      try {
        locus = pencil_meet_locus(sigma, p0);
      } catch (const Error&) {
        continue;
      }
      ++checked;
      EXPECT_EQ(std::set<Point>(locus.begin(), locus.end()), locus_oracle(s, sigma, p0));
    }
  }
}

TEST(PencilMeetLocus, Errors) {
  const auto gf3 = field_of_order(3);
  const Space s = pg(2, 3);
  const Point p0 = pt(s, {1, 0, 0});
  EXPECT_EQ(code_of([&] { pencil_meet_locus(SemilinearMap::identity(gf3, 3), p0); }),
            ErrorCode::kSigmaFixesP0);
  const SemilinearMap swap(gf3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, {0});
  EXPECT_EQ(code_of([&] { pencil_meet_locus(swap, p0); }), ErrorCode::kSigmaFixesLine);
}

TEST(PencilMeetLocus, FrobeniusTwistedSetHasCollinearTriple) {
  // {(u0 u0^a, u0 u1^a, u1 u1^a)} over GF(4) with a the Frobenius map.
  const Space s = pg(2, 4);
  const Field& f = s.field();
  std::set<Point> set;
  for (const auto& u : pg(1, 4).points()) {
    const Elem a0 = f.frobenius(u[0], 1);
    const Elem a1 = f.frobenius(u[1], 1);
    set.insert(pt(s, {f.mul(u[0], a0), f.mul(u[0], a1), f.mul(u[1], a1)}));
  }
  EXPECT_TRUE(set.count(pt(s, {1, 1, 1})));
  EXPECT_TRUE(set.count(pt(s, {1, 3, 1})));
  EXPECT_TRUE(set.count(pt(s, {1, 2, 1})));
  EXPECT_TRUE(oracle::collinear(f, pt(s, {1, 1, 1}), pt(s, {1, 3, 1}), pt(s, {1, 2, 1})));
  const std::vector<Point> pts(set.begin(), set.end());
  EXPECT_TRUE(has_collinear_triple(f, pts));
}

TEST(PencilMeetLocus, ProjectiveSigmaGivesARegularConic) {
  for (int q : {4, 9}) {
    const Space s = pg(2, q);
    const Point p0 = pt(s, {1, 0, 0});
    Rng rng(100 + static_cast<std::uint64_t>(q));
    int checked = 0;
    while (checked < 10) {
      const auto sigma = random_semilinear(s.field_ptr(), 3, rng, FieldAutomorphism{0});
      std::vector<Point> locus;
      try {
        locus = pencil_meet_locus(sigma, p0);
      } catch (const Error&) {
        continue;
      }
      ++checked;
      EXPECT_EQ(locus.size(), static_cast<std::size_t>(q) + 1);
      EXPECT_TRUE(is_regular_conic(PlaneArc(Subspace::whole(s), locus)));
    }
  }
}

std::uint64_t count_ovals_by_brute_force(int q) {
  const Space s = pg(2, q);
  const auto pts = s.points();
  const std::size_t k = static_cast<std::size_t>(q) + 1;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::uint64_t ovals = 0;
  while (true) {
    bool arc = true;
    for (std::size_t a = 0; a < k && arc; ++a) {
      for (std::size_t b = a + 1; b < k && arc; ++b) {
        for (std::size_t c = b + 1; c < k && arc; ++c) {
          arc = !oracle::collinear(s.field(), pts[idx[a]], pts[idx[b]], pts[idx[c]]);
        }
      }
    }
    if (arc) ++ovals;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pts.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return ovals;
}

TEST(OvalScan, EveryOvalIsAConic) {
  for (int q : {2, 3, 4, 5}) {
    const auto report = scan_ovals(q);
    EXPECT_TRUE(report.non_conic_ovals.empty()) << q;
    const std::uint64_t conics = static_cast<std::uint64_t>(q) * q * q * q * q - q * q;
    EXPECT_EQ(report.ovals, conics);
    EXPECT_EQ(report.conics, conics);
  }
}

TEST(OvalScan, CountMatchesSubsetEnumeration) {
  for (int q : {2, 3, 4}) EXPECT_EQ(scan_ovals(q).ovals, count_ovals_by_brute_force(q)) << q;
}

TEST(OvalScan, SizeCap) {
  EXPECT_EQ(code_of([] { scan_ovals(7); }), ErrorCode::kSizeCapExceeded);
}

}  // namespace
}  // namespace pgtool
