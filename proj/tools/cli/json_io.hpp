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

#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "optspeed/evolution.hpp"
#include "optspeed/numerics.hpp"
#include "optspeed/quantum_states.hpp"

namespace optspeed::cli {

/// Malformed or unreadable input. Maps to exit status 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The "kind" tag carried by matrix files.
enum class MatrixKind { kHermitian, kSkewHermitian, kDensity };

std::string to_string(MatrixKind kind);
MatrixKind matrix_kind_from_string(const std::string& s);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

/// {"kind": ..., "n": n, "rows": [[[re, im], ...], ...]}
nlohmann::json matrix_to_json(const ComplexMatrix& m, MatrixKind kind);
/// Parses and checks the kind tag against `expected`.
ComplexMatrix matrix_from_json(const nlohmann::json& j, MatrixKind expected);

/// {"n": n, "amplitudes": [[re, im], ...], "units": {"hbar": h}}
nlohmann::json state_to_json(const PureState& state, const Units& units = {});

struct StateFile {
  PureState state;
  Units units;
};

/// Amplitudes within 1e-6 of unit norm are renormalized; anything further
/// off is rejected.
StateFile state_from_json(const nlohmann::json& j);
/// Optional {"units": {"hbar": ...}} member of any input object; defaults to hbar = 1.
Units units_from_json(const nlohmann::json& j);

/// {"kind": "pure"|"density", "times": [...], "states": [...]}
nlohmann::json trajectory_to_json(const Trajectory& traj);
nlohmann::json trajectory_to_json(const DensityTrajectory& traj);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace optspeed::cli
