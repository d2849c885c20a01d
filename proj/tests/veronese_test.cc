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

#include "oracles.h"
#include "pgtool/generators.h"
#include "pgtool/quadrics.h"
#include "pgtool/veronese.h"

namespace pgtool {
namespace {

Space pg(int n, int q) { return Space(field_of_order(q), n); }
Point pt(const Space& s, Vec v) { return Point(s.field(), std::move(v)); }

TEST(Delta, Values) {
  EXPECT_EQ(delta(0), 1);
  EXPECT_EQ(delta(1), 3);
  EXPECT_EQ(delta(2), 6);
  EXPECT_EQ(delta(3), 10);
}

TEST(Veronese, FlatOrderMatchesFormOrder) {
  const Veronese v(pg(2, 3));
  EXPECT_EQ(v.target().n(), 5);
  const std::vector<std::pair<int, int>> expected = {{0, 0}, {0, 1}, {0, 2},
                                                     {1, 1}, {1, 2}, {2, 2}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(v.monomial(i), expected[i]);
    EXPECT_EQ(v.flat_index(expected[i].first, expected[i].second), i);
    EXPECT_EQ(v.flat_index(expected[i].second, expected[i].first), i);
  }
}

TEST(Veronese, RhoExamples) {
  const Space s = pg(2, 3);
  const Veronese v(s);
  EXPECT_EQ(v.rho(pt(s, {1, 0, 0})).coords(), (Vec{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(v.rho(pt(s, {1, 2, 0})).coords(), (Vec{1, 2, 0, 1, 0, 0}));
  const Space line = pg(1, 3);
  EXPECT_EQ(Veronese(line).rho(pt(line, {1, 2})).coords(), (Vec{1, 2, 1}));
  try {
    v.rho(pt(line, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Veronese, PreimageExamples) {
  const Space s = pg(2, 3);
  const Veronese v(s);
  EXPECT_EQ(*v.preimage(pt(v.target(), {1, 0, 0, 0, 0, 0})), pt(s, {1, 0, 0}));
  EXPECT_FALSE(v.preimage(pt(v.target(), {0, 1, 0, 0, 0, 0})).has_value());
  EXPECT_EQ(*v.preimage(pt(v.target(), {1, 2, 0, 1, 0, 0})), pt(s, {1, 2, 0}));
  const Veronese v2(pg(2, 2));
  EXPECT_FALSE(v2.preimage(pt(v2.target(), {0, 1, 0, 0, 0, 0})).has_value());
}

TEST(Veronese, PreimageInvertsRhoAndNothingElse) {
  for (auto [n, q] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{2, 2}}) {
    const Space s = pg(n, q);
    const Veronese v(s);
    std::set<Point> image;
    for (const auto& x : s.points()) {
      const Point y = v.rho(x);
      image.insert(y);
      ASSERT_EQ(*v.preimage(y), x);
    }
    EXPECT_EQ(image.size(), s.num_points());
    if (v.target().num_points() < 20000) {
      for (const auto& y : v.target().points()) {
        ASSERT_EQ(v.preimage(y).has_value(), image.count(y) == 1);
      }
    }
  }
}

TEST(Veronese, ImageSpansTheTarget) {
  for (auto [n, q] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{1, 4}, std::pair{1, 5},
                      std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 2},
                      std::pair{3, 3}}) {
    const Space s = pg(n, q);
    const Veronese v(s);
    std::vector<Point> images;
    for (const auto& x : s.points()) images.push_back(v.rho(x));
    EXPECT_EQ(Subspace::span(v.target(), images).dim(), delta(n) - 1);
  }
}

TEST(Veronese, ClosureIsThePreimageOfTheImageSpan) {
  for (auto [n, q] : {std::pair{2, 2}, std::pair{1, 3}}) {
    const Space s = pg(n, q);
    const Veronese v(s);
    const auto pts = s.points();
    for (unsigned mask = 0; mask < (1u << pts.size()); ++mask) {
      std::vector<Point> m, images;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (mask >> i & 1u) {
          m.push_back(pts[i]);
          images.push_back(v.rho(pts[i]));
        }
      }
      const Subspace span = Subspace::span(v.target(), images);
      std::vector<Point> pre;
      for (const auto& x : pts) {
        if (span.contains(v.rho(x))) pre.push_back(x);
      }
      ASSERT_EQ(pre, oracle::quadric_closure(s, m));
    }
  }
}

TEST(Veronese, FormsPairWithVeroneseCoordinates) {
  const Space s = pg(2, 5);
  const Veronese v(s);
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    Vec c(6);
    for (auto& x : c) x = static_cast<Elem>(rng.below(5));
    const Point x = random_point(s, rng);
    EXPECT_EQ(dot(s.field(), c, v.monomials(x.coords())),
              oracle::eval_form(s.field(), c, x.coords()));
  }
}

}  // namespace
}  // namespace pgtool
