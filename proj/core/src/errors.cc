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

#include "pgtool/errors.h"

namespace pgtool {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrimeP: return "NonPrimeP";
    case ErrorCode::kDegreeZero: return "DegreeZero";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kSpaceMismatch: return "SpaceMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNotAFrame: return "NotAFrame";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kPointNotInSubspace: return "PointNotInSubspace";
    case ErrorCode::kNotALine: return "NotALine";
    case ErrorCode::kPointInBase: return "PointInBase";
    case ErrorCode::kOracleSizeCap: return "OracleSizeCap";
    case ErrorCode::kPointOutsidePlane: return "PointOutsidePlane";
    case ErrorCode::kPointNotOnArc: return "PointNotOnArc";
    case ErrorCode::kNoUniqueUnisecant: return "NoUniqueUnisecant";
    case ErrorCode::kParallelLinesImpossible: return "ParallelLinesImpossible";
    case ErrorCode::kSigmaFixesLine: return "SigmaFixesLine";
    case ErrorCode::kSigmaFixesP0: return "SigmaFixesP0";
    case ErrorCode::kModeInfeasible: return "ModeInfeasible";
    case ErrorCode::kNotTotal: return "NotTotal";
    case ErrorCode::kNonInjective: return "NonInjective";
    case ErrorCode::kDuplicateSource: return "DuplicateSource";
    case ErrorCode::kNotIncident: return "NotIncident";
    case ErrorCode::kNotComplementary: return "NotComplementary";
    case ErrorCode::kImageNotAPoint: return "ImageNotAPoint";
    case ErrorCode::kLinesNotConcurrent: return "LinesNotConcurrent";
    case ErrorCode::kNotACollineation: return "NotACollineation";
    case ErrorCode::kBetaUnavailable: return "BetaUnavailable";
    case ErrorCode::kFrameCheckFailed: return "FrameCheckFailed";
    case ErrorCode::kNoAutomorphismMatch: return "NoAutomorphismMatch";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kNotRegular: return "NotRegular";
    case ErrorCode::kForeignTarget: return "ForeignTarget";
    case ErrorCode::kParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

}  // namespace pgtool
