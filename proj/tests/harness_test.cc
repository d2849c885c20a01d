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

#include "pgtool/harness.h"

namespace pgtool {
namespace {

TEST(Harness, KnowsThirteenSuites) {
  const auto ids = suite_ids();
  EXPECT_EQ(ids.size(), 13u);
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
}

TEST(Harness, UnknownSuite) {
  try {
    run_suite("no-such-suite");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownSuite);
  }
}

TEST(Harness, ReportsAreReproducible) {
  SuiteParams params;
  params.seed = 17;
  params.count = 3;
  for (const char* id : {"factorization", "negative-controls", "collinear-dichotomy"}) {
    const auto a = run_suite(id, params);
    const auto b = run_suite(id, params);
    EXPECT_TRUE(a.pass) << id;
    EXPECT_EQ(result_body(a).dump(), result_body(b).dump());
    EXPECT_FALSE(result_body(a).contains("wall_ms"));
    EXPECT_EQ(result_body(a)["params"]["seed"], 17);
    EXPECT_FALSE(a.anchor.empty());
  }
}

TEST(Harness, CountOverridesTheDefault) {
  SuiteParams params;
  params.count = 2;
  EXPECT_EQ(run_suite("frame-injection", params).cases, 2u);
  EXPECT_EQ(run_suite("frame-injection").cases, 20u);
}

}  // namespace
}  // namespace pgtool
