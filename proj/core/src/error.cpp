// Copyright 2026 The optspeed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "optspeed/error.hpp"

namespace optspeed {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotSkewHermitian: return "NotSkewHermitian";
    case ErrorCode::kNotTraceless: return "NotTraceless";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::kMalformedBlocks: return "MalformedBlocks";
    case ErrorCode::kStructureMismatch: return "StructureMismatch";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kInvalidDensity: return "InvalidDensity";
    case ErrorCode::kNotRankOne: return "NotRankOne";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kSpectraMismatch: return "SpectraMismatch";
    case ErrorCode::kDistinguishedStateNotMapped: return "DistinguishedStateNotMapped";
    case ErrorCode::kStationaryState: return "StationaryState";
    case ErrorCode::kNotOptimal: return "NotOptimal";
    case ErrorCode::kFoldExceeded: return "FoldExceeded";
  }
  return "Unknown";
}

}  // namespace optspeed
