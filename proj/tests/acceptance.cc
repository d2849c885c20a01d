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

// Runs every verification suite at its pinned time budget and prints one
// PASS/FAIL line per suite. Exits non-zero if any suite fails or overruns.

#include <cstdio>
#include <string>
#include <vector>

#include "pgtool/harness.h"

namespace {

struct Criterion {
  const char* suite;
  double limit_ms;
};

const std::vector<Criterion> kCriteria = {
    {"closure-transfer", 1'000},      {"target-dimension", 10'000},
    {"closed-chains", 60'000},        {"hyperplane-dimension", 10'000},
    {"affine-embedding", 30'000},     {"hyperplane-extension", 60'000},
    {"collinear-dichotomy", 30'000},  {"line-conics", 60'000},
    {"tangent-frame", 60'000},        {"factorization", 300'000},
    {"frame-injection", 10'000},      {"oval-scan", 120'000},
    {"negative-controls", 10'000},
};

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : kCriteria) {
    bool pass = false;
    double ms = 0;
    std::string detail;
    try {
      const auto result = pgtool::run_suite(c.suite);
      ms = result.wall_ms;
      pass = result.pass && ms <= c.limit_ms;
      if (!result.pass) {
        detail = std::to_string(result.witnesses.size()) + " failing case(s); first: " +
                 result.witnesses.front();
      } else if (ms > c.limit_ms) {
        detail = "over the time limit";
      } else {
        detail = std::to_string(result.cases) + " case(s)";
      }
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::printf("%s %-22s %10.1f ms (limit %.0f ms)  %s\n", pass ? "PASS" : "FAIL", c.suite, ms,
                c.limit_ms, detail.c_str());
    failures += pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failures,
              kCriteria.size());
  return failures == 0 ? 0 : 1;
}
