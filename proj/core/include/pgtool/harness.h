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

#ifndef PGTOOL_HARNESS_H_
#define PGTOOL_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgtool/io.h"

namespace pgtool {

struct SuiteParams {
  std::uint64_t seed = 0;             // base seed; case s uses seed + s
  std::optional<std::uint64_t> count; // overrides the default number of seeded cases
};

struct SuiteResult {
  std::string id;
  std::string anchor;  // the property the suite checks
  Json params;
  bool pass = false;
  std::uint64_t cases = 0;
  std::vector<std::string> witnesses;  // one per failing case, sorted by case key
  double wall_ms = 0;                  // not part of the comparable body
};

// Deterministic part of a result.
Json result_body(const SuiteResult& result);

std::vector<std::string> suite_ids();
SuiteResult run_suite(const std::string& id, const SuiteParams& params = {});
std::vector<SuiteResult> run_all_suites(const SuiteParams& params = {});

}  // namespace pgtool

#endif  // PGTOOL_HARNESS_H_
