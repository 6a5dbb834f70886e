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

#include "cli/json_io.hpp"

#include <cmath>
#include <fstream>

#include "optspeed/error.hpp"

namespace optspeed::cli {

using nlohmann::json;

namespace {

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

int positive_size(const json& j) {
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw ParseError("\"n\" must be an integer");
  }
  const auto n = j.at("n").get<long long>();
  if (n < 1 || n > 4096) throw ParseError("\"n\" out of range");
  return static_cast<int>(n);
}

json complex_array(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

json matrix_rows(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::kHermitian: return "hermitian";
    case MatrixKind::kSkewHermitian: return "skew-hermitian";
    case MatrixKind::kDensity: return "density";
  }
  return "unknown";
}

MatrixKind matrix_kind_from_string(const std::string& s) {
  if (s == "hermitian") return MatrixKind::kHermitian;
  if (s == "skew-hermitian") return MatrixKind::kSkewHermitian;
  if (s == "density") return MatrixKind::kDensity;
  throw ParseError("unknown matrix kind \"" + s + "\"");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("complex entries are [re, im] pairs");
  return {finite_number(j[0], "real part"), finite_number(j[1], "imaginary part")};
}

json matrix_to_json(const ComplexMatrix& m, MatrixKind kind) {
  return json{{"kind", to_string(kind)}, {"n", m.rows()}, {"rows", matrix_rows(m)}};
}

ComplexMatrix matrix_from_json(const json& j, MatrixKind expected) {
  if (!j.is_object()) throw ParseError("matrix file must hold a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("matrix file needs a \"kind\" tag");
  }
  const MatrixKind kind = matrix_kind_from_string(j.at("kind").get<std::string>());
  if (kind != expected) {
    throw ParseError("expected kind \"" + to_string(expected) + "\", got \"" + to_string(kind) +
                     "\"");
  }
  const int n = positive_size(j);
  if (!j.contains("rows") || !j.at("rows").is_array() ||
      j.at("rows").size() != static_cast<std::size_t>(n)) {
    throw ParseError("\"rows\" must hold n rows");
  }
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = j.at("rows")[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw ParseError("matrix is not square");
    }
    for (int c = 0; c < n; ++c) m(r, c) = complex_from_json(row[c]);
  }
  return m;
}

json state_to_json(const PureState& state, const Units& units) {
  return json{{"n", state.dim()},
              {"amplitudes", complex_array(state.amplitudes())},
              {"units", {{"hbar", units.hbar}}}};
}

Units units_from_json(const json& j) {
  Units units;
  if (j.is_object() && j.contains("units")) {
    const json& u = j.at("units");
    if (!u.is_object()) throw ParseError("\"units\" must be an object");
    if (u.contains("hbar")) units.hbar = finite_number(u.at("hbar"), "hbar");
    if (!(units.hbar > 0.0)) throw ParseError("hbar must be positive");
  }
  return units;
}

StateFile state_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("state file must hold a JSON object");
  const int n = positive_size(j);
  if (!j.contains("amplitudes") || !j.at("amplitudes").is_array() ||
      j.at("amplitudes").size() != static_cast<std::size_t>(n)) {
    throw ParseError("\"amplitudes\" must hold n entries");
  }
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v[i] = complex_from_json(j.at("amplitudes")[i]);
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > 1e-6) {
    throw ParseError("amplitudes are not normalized (norm " + std::to_string(norm) + ")");
  }
  const Units units = units_from_json(j);
  // Amplitudes already normalized to working precision are kept bit-for-bit.
  if (std::abs(norm - 1.0) > 1e-12) v /= norm;
  return {PureState(std::move(v)), units};
}

json trajectory_to_json(const Trajectory& traj) {
  json states = json::array();
  for (const PureState& s : traj.states) states.push_back(complex_array(s.amplitudes()));
  return json{{"kind", "pure"},
              {"times", traj.times},
              {"states", std::move(states)},
              {"units", {{"hbar", traj.units.hbar}}}};
}

json trajectory_to_json(const DensityTrajectory& traj) {
  json states = json::array();
  for (const DensityMatrix& s : traj.states) states.push_back(matrix_rows(s.matrix()));
  return json{{"kind", "density"},
              {"times", traj.times},
              {"states", std::move(states)},
              {"units", {{"hbar", traj.units.hbar}}}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace optspeed::cli
