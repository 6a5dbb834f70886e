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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace optspeed::cli {

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

/// Outputs of one command, printed either as `key=value` lines or as a JSON
/// run report carrying the command echo, input digest, seed and wall time.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  /// Feeds canonical text of an input (file contents, flag values) into the digest.
  void add_input(std::string_view canonical);
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_wall_time(double seconds) { wall_time_ = seconds; }

  void put(std::string key, nlohmann::json value);

  void print_lines(std::ostream& out) const;
  nlohmann::json to_json() const;

 private:
  std::string command_;
  std::string inputs_;
  std::optional<std::uint64_t> seed_;
  double wall_time_ = 0.0;
  std::vector<std::pair<std::string, nlohmann::json>> outputs_;
};

/// Shortest round-trip decimal text for a double.
std::string format_double(double v);

}  // namespace optspeed::cli
