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

#include "cli/report.hpp"

#include <charconv>
#include <cstdio>

namespace optspeed::cli {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string format_double(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, result.ptr);
}

void RunReport::add_input(std::string_view canonical) {
  inputs_.append(canonical);
  inputs_.push_back('\n');
}

void RunReport::put(std::string key, nlohmann::json value) {
  outputs_.emplace_back(std::move(key), std::move(value));
}

void RunReport::print_lines(std::ostream& out) const {
  for (const auto& [key, value] : outputs_) {
    out << key << '=';
    if (value.is_string()) {
      out << value.get<std::string>();
    } else if (value.is_number_float()) {
      out << format_double(value.get<double>());
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json outputs = nlohmann::json::object();
  for (const auto& [key, value] : outputs_) outputs[key] = value;
  nlohmann::json report{{"command", command_},
                        {"inputs_digest", "fnv1a64:" + fnv1a_hex(inputs_)},
                        {"outputs", std::move(outputs)},
                        {"wall_time_s", wall_time_}};
  report["seed"] = seed_ ? nlohmann::json(*seed_) : nlohmann::json(nullptr);
  return report;
}

}  // namespace optspeed::cli
