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

#include <cstdio>

#include "pgtool/generators.h"
#include "pgtool/io.h"

namespace pgtool {
namespace {

template <typename Fn>
ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kZeroVector;
}

TEST(FieldJson, RoundTripAndValidation) {
  const auto gf9 = create_field(3, 2);
  const Json j = to_json(*gf9);
  EXPECT_EQ(j.dump(), R"({"k":2,"modulus":[1,0,1],"p":3})");
  EXPECT_TRUE(*field_from_json(j) == *gf9);
  EXPECT_EQ(code_of([] { field_from_json(Json::parse(R"({"p":3,"k":2,"modulus":[2,0,1]})")); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { field_from_json(Json::parse(R"({"p":3})")); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { field_from_json(Json::parse(R"({"p":4,"k":1})")); }),
            ErrorCode::kNonPrimeP);
}

TEST(PointJson, NormalizesOnLoad) {
  const Space s(field_of_order(3), 1);
  EXPECT_EQ(point_from_json(s, Json::parse("[2,1]")).coords(), (Vec{1, 2}));
  EXPECT_EQ(code_of([&] { point_from_json(s, Json::parse("[3,1]")); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] { point_from_json(s, Json::parse("[1,1,1]")); }), ErrorCode::kSpaceMismatch);
  EXPECT_EQ(code_of([&] { point_from_json(s, Json::parse("[0,0]")); }), ErrorCode::kZeroVector);
}

TEST(SubspaceJson, AnySpanningSetIsAccepted) {
  const Space s(field_of_order(3), 2);
  const Subspace a = subspace_from_json(s, Json::parse("[[1,0,0],[1,1,0],[0,1,0]]"));
  const Subspace b = subspace_from_json(s, Json::parse("[[1,2,0],[2,2,0]]"));
  EXPECT_TRUE(a == b);
  EXPECT_TRUE(subspace_from_json(s, to_json(a)) == a);
}

TEST(MapJson, RoundTripIsBitExact) {
  const auto nu = generate_embedding(EmbeddingKind::kVeroneseKappa, 2, field_of_order(4), 3);
  const Json j = to_json(nu);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["n_prime"], 5);
  EXPECT_EQ(j["pairs"].size(), 21u);
  const auto back = point_map_from_json(j);
  EXPECT_EQ(back.table(), nu.table());
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(MapJson, NormalizesReordersAndRejectsDuplicates) {
  const std::string text = R"({"field":{"p":3,"k":1,"modulus":[0,1]},"n":1,"n_prime":2,
    "pairs":[[[0,2],[0,0,2]],[[2,0],[2,0,0]],[[1,1],[1,1,1]],[[1,2],[1,2,1]]]})";
  const auto nu = point_map_from_json(Json::parse(text));
  const Space& s = nu.source();
  EXPECT_EQ(nu(Point(s.field(), {0, 1})), Point(nu.target().field(), {0, 0, 1}));
  EXPECT_EQ(nu.image(0), Point(nu.target().field(), {0, 0, 1}));
  const std::string dup = R"({"field":{"p":3,"k":1},"n":1,"n_prime":2,
    "pairs":[[[0,2],[0,0,2]],[[0,1],[1,0,0]],[[1,1],[1,1,1]],[[1,2],[1,2,1]]]})";
  EXPECT_EQ(code_of([&] { point_map_from_json(Json::parse(dup)); }), ErrorCode::kDuplicateSource);
  const std::string partial = R"({"field":{"p":3,"k":1},"n":1,"n_prime":2,
    "pairs":[[[0,1],[0,0,1]]]})";
  EXPECT_EQ(code_of([&] { point_map_from_json(Json::parse(partial)); }), ErrorCode::kNotTotal);
  EXPECT_EQ(code_of([&] { point_map_from_json(Json::parse(R"({"n":1})")); }),
            ErrorCode::kParseError);
}

TEST(KappaJson, RoundTrip) {
  const auto gf9 = field_of_order(9);
  Rng rng(2);
  const auto kappa = random_semilinear(gf9, 6, rng, FieldAutomorphism{1});
  const Json j = to_json(kappa);
  EXPECT_EQ(j["alpha_exponent"], 1);
  const auto back = semilinear_from_json(gf9, j);
  EXPECT_EQ(back.matrix(), kappa.matrix());
  EXPECT_EQ(back.alpha(), kappa.alpha());
  EXPECT_EQ(code_of([&] {
              semilinear_from_json(gf9, Json::parse(R"({"matrix":[[1,0],[0,1]],"alpha_exponent":2})"));
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] {
              semilinear_from_json(gf9, Json::parse(R"({"matrix":[[1,1],[1,1]],"alpha_exponent":0})"));
            }),
            ErrorCode::kSingularMatrix);
  EXPECT_EQ(code_of([&] {
              semilinear_from_json(gf9, Json::parse(R"({"matrix":[[1,0,0],[0,1]],"alpha_exponent":0})"));
            }),
            ErrorCode::kParseError);
}

TEST(Files, WriteThenRead) {
  const std::string path = ::testing::TempDir() + "pgtool_io_test.json";
  const auto nu = generate_embedding(EmbeddingKind::kVeronese, 1, field_of_order(5), 0);
  write_json_file(path, to_json(nu));
  EXPECT_EQ(point_map_from_json(read_json_file(path)).table(), nu.table());
  std::remove(path.c_str());
  EXPECT_EQ(code_of([&] { read_json_file(path); }), ErrorCode::kParseError);
}

}  // namespace
}  // namespace pgtool
