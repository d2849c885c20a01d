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

#ifndef PGTOOL_ERRORS_H_
#define PGTOOL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgtool {

enum class ErrorCode {
  // finite fields
  kNonPrimeP,
  kDegreeZero,
  kSizeCapExceeded,
  kZeroInverse,
  kFieldMismatch,
  // projective geometry
  kSpaceMismatch,
  kDimensionMismatch,
  kZeroVector,
  kNotAFrame,
  kSingularSystem,
  kSingularMatrix,
  kPointNotInSubspace,
  kNotALine,
  kPointInBase,
  // closure and arcs
  kOracleSizeCap,
  kPointOutsidePlane,
  kPointNotOnArc,
  kNoUniqueUnisecant,
  kParallelLinesImpossible,
  kSigmaFixesLine,
  kSigmaFixesP0,
  // embedding analysis
  kModeInfeasible,
  kNotTotal,
  kNonInjective,
  kDuplicateSource,
  kNotIncident,
  kNotComplementary,
  kImageNotAPoint,
  kLinesNotConcurrent,
  kNotACollineation,
  kBetaUnavailable,
  kFrameCheckFailed,
  kNoAutomorphismMatch,
  kVerificationFailed,
  kNotRegular,
  kForeignTarget,
  // harness
  kParamOutOfRange,
  kUnknownSuite,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception type. The code is
// stable and is what callers (and the CLI exit-status mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pgtool

#endif  // PGTOOL_ERRORS_H_
