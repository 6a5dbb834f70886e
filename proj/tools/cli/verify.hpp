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

#include <cstdint>
#include <string>
#include <vector>

namespace optspeed::cli {

enum class Suite { kAlgebra, kSynthesis, kEvolution, kAll };

/// Throws ParseError for unknown names.
Suite suite_from_string(const std::string& name);
std::string to_string(Suite suite);

struct VerifyOptions {
  Suite suite = Suite::kAll;
  int trials = 100;
  std::uint64_t seed = 42;
  int n_max = 8;
  /// Adds a property that is known to fail, to prove the harness can fail.
  bool negative_control = false;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  int trials = 0;
  /// Largest residual among the bounded quantities of the property.
  double max_residual = 0.0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// Runs every property of the selected suite. Each trial draws its own
/// generator from (seed, property, trial), so results do not depend on
/// execution order.
std::vector<PropertyResult> run_verify(const VerifyOptions& options);

}  // namespace optspeed::cli
