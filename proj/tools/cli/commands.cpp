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

#include "cli/commands.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/json_io.hpp"
#include "cli/report.hpp"
#include "cli/verify.hpp"
#include "optspeed/error.hpp"
#include "optspeed/evolution.hpp"
#include "optspeed/lie_flag.hpp"
#include "optspeed/synthesis.hpp"

namespace optspeed::cli {

namespace {

using nlohmann::json;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(RunReport& report, const Stopwatch& clock, bool as_json, std::ostream& out) {
  report.set_wall_time(clock.seconds());
  if (as_json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    report.print_lines(out);
  }
}

json load(RunReport& report, const std::string& path) {
  json j = read_json_file(path);
  report.add_input(j.dump());
  return j;
}

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": dimensions " + std::to_string(a) + " and " +
                    std::to_string(b) + " differ");
  }
}

std::vector<int> parse_blocks(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("--blocks must be a comma-separated list of integers");
    }
    if (used != item.size()) throw ParseError("--blocks must be a comma-separated list of integers");
    parts.push_back(value);
  }
  return parts;
}

struct SynthesizeArgs {
  std::string from, to, out;
  double energy = 0.0;
  std::optional<std::uint64_t> family_seed;
};

int synthesize(const SynthesizeArgs& a, bool as_json, std::ostream& out) {
  Stopwatch clock;
  RunReport report("synthesize");
  const StateFile from = state_from_json(load(report, a.from));
  const StateFile to = state_from_json(load(report, a.to));
  require_same_dim(from.state.dim(), to.state.dim(), "--from/--to");
  if (!(a.energy > 0.0)) throw ParseError("--energy must be positive");
  report.add_input("energy=" + format_double(a.energy));
  const Units units = from.units;

  const SynthesizedHamiltonian core = optimal_hamiltonian(from.state, to.state, a.energy);
  report.put("n", from.state.dim());
  report.put("distance", core.distance);
  report.put("energy", a.energy);
  report.put("hbar", units.hbar);
  if (a.family_seed) {
    report.set_seed(*a.family_seed);
    report.put("family_seed", *a.family_seed);
  }
  if (core.coincident) {
    report.put("T", 0.0);
    report.put("verdict", "Stationary");
    report.put("note", "states coincide as rays; no Hamiltonian written");
    emit(report, clock, as_json, out);
    return kExitCoincident;
  }

  const ComplexMatrix h = a.family_seed
                              ? optimal_family_sample(from.state, to.state, a.energy, *a.family_seed)
                              : core.hamiltonian;
  const OptimalityVerdict verdict = is_optimal_speed(h, from.state);
  write_json_file(a.out, matrix_to_json(h, MatrixKind::kHermitian));
  report.put("T", qsl_time(from.state, to.state, h, units));
  report.put("verdict", std::string(to_string(verdict.kind)));
  report.put("delta_e", verdict.delta_e);
  report.put("delta_e_max", verdict.delta_e_max);
  report.put("out", a.out);
  emit(report, clock, as_json, out);
  return kExitOk;
}

struct CheckArgs {
  std::string ham, state;
};

int check(const CheckArgs& a, bool as_json, std::ostream& out) {
  Stopwatch clock;
  RunReport report("check");
  const ComplexMatrix h = matrix_from_json(load(report, a.ham), MatrixKind::kHermitian);
  const StateFile state = state_from_json(load(report, a.state));
  require_same_dim(static_cast<int>(h.rows()), state.state.dim(), "--ham/--state");

  const OptimalityVerdict verdict = is_optimal_speed(h, state.state);
  report.put("n", state.state.dim());
  report.put("verdict", std::string(to_string(verdict.kind)));
  report.put("delta_e", verdict.delta_e);
  report.put("delta_e_max", verdict.delta_e_max);
  report.put("residual", verdict.residual);
  emit(report, clock, as_json, out);
  switch (verdict.kind) {
    case Verdict::kOptimal: return kExitOk;
    case Verdict::kSuboptimal: return kExitFailed;
    case Verdict::kStationary: return kExitStationary;
  }
  return kExitFailed;
}

struct EquigeodesicArgs {
  std::string vector, blocks;
  int samples = 16;
  std::uint64_t seed = 0;
};

int equigeodesic(const EquigeodesicArgs& a, bool as_json, std::ostream& out) {
  Stopwatch clock;
  RunReport report("equigeodesic");
  const SuVector x(matrix_from_json(load(report, a.vector), MatrixKind::kSkewHermitian));
  const BlockStructure blocks(parse_blocks(a.blocks));
  require_same_dim(x.dim(), blocks.dim(), "--vector/--blocks");
  if (a.samples < 1) throw ParseError("--samples must be at least 1");
  report.add_input("blocks=" + a.blocks + ";samples=" + std::to_string(a.samples));
  report.set_seed(a.seed);

  const StructuralCheck structural = equigeodesic_structural(x, blocks);
  const VariationalCheck variational = is_equigeodesic_variational(x, blocks, a.samples, a.seed);
  report.put("n", x.dim());
  report.put("structural", structural.equigeodesic);
  report.put("structural_residual", structural.residual);
  report.put("vacuous", structural.vacuous);
  report.put("variational", variational.equigeodesic);
  report.put("variational_max_residual", variational.max_residual);
  report.put("agree", structural.equigeodesic == variational.equigeodesic);
  emit(report, clock, as_json, out);
  return structural.equigeodesic && variational.equigeodesic ? kExitOk : kExitFailed;
}

struct EvolveArgs {
  std::string ham, state, out;
  double t0 = 0.0;
  double t1 = 0.0;
  int steps = 100;
  bool density = false;
};

int evolve(const EvolveArgs& a, bool as_json, std::ostream& out) {
  Stopwatch clock;
  RunReport report("evolve");
  const ComplexMatrix h = matrix_from_json(load(report, a.ham), MatrixKind::kHermitian);
  const json state_json = load(report, a.state);
  if (!(a.t1 >= a.t0)) throw ParseError("--t1 must not precede --t0");
  if (a.steps < 1) throw ParseError("--steps must be at least 1");
  report.add_input("t0=" + format_double(a.t0) + ";t1=" + format_double(a.t1) +
                   ";steps=" + std::to_string(a.steps));
  const std::vector<double> grid = uniform_grid(a.t0, a.t1, a.steps);

  report.put("samples", grid.size());
  if (a.density) {
    const DensityMatrix rho(matrix_from_json(state_json, MatrixKind::kDensity));
    require_same_dim(static_cast<int>(h.rows()), rho.dim(), "--ham/--state");
    const DensityTrajectory traj = sample_trajectory(h, rho, grid, units_from_json(state_json));
    double trace_residual = 0.0;
    double spectrum_residual = 0.0;
    const RealVector initial = rho.spectrum();
    for (const DensityMatrix& s : traj.states) {
      trace_residual = std::max(trace_residual, std::abs(s.matrix().trace() - 1.0));
      spectrum_residual =
          std::max(spectrum_residual, (s.spectrum() - initial).cwiseAbs().maxCoeff());
    }
    write_json_file(a.out, trajectory_to_json(traj));
    report.put("trace_residual", trace_residual);
    report.put("spectrum_residual", spectrum_residual);
  } else {
    const StateFile state = state_from_json(state_json);
    require_same_dim(static_cast<int>(h.rows()), state.state.dim(), "--ham/--state");
    const Trajectory traj = sample_trajectory(h, state.state, grid, state.units);
    double norm_residual = 0.0;
    double drift = 0.0;
    const double initial = energy_uncertainty(h, state.state);
    for (const PureState& s : traj.states) {
      norm_residual = std::max(norm_residual, std::abs(s.amplitudes().norm() - 1.0));
      drift = std::max(drift, std::abs(energy_uncertainty(h, s) - initial));
    }
    write_json_file(a.out, trajectory_to_json(traj));
    report.put("norm_residual", norm_residual);
    report.put("uncertainty_drift", drift);
  }
  report.put("out", a.out);
  emit(report, clock, as_json, out);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  VerifyOptions options;
};

int verify(const VerifyArgs& a, bool as_json, std::ostream& out) {
  Stopwatch clock;
  VerifyOptions options = a.options;
  options.suite = suite_from_string(a.suite);
  const std::vector<PropertyResult> results = run_verify(options);

  int failed = 0;
  json properties = json::array();
  for (const PropertyResult& r : results) {
    if (!r.passed()) ++failed;
    if (as_json) {
      properties.push_back({{"suite", r.suite},
                            {"property", r.name},
                            {"trials", r.trials},
                            {"max_residual", r.max_residual},
                            {"failures", r.failures},
                            {"status", r.passed() ? "PASS" : "FAIL"},
                            {"first_failure", r.first_failure}});
      continue;
    }
    out << "suite=" << r.suite << " property=" << r.name << " trials=" << r.trials
        << " max_residual=" << format_double(r.max_residual) << " failures=" << r.failures
        << " status=" << (r.passed() ? "PASS" : "FAIL");
    if (!r.passed()) out << " first_failure=\"" << r.first_failure << '"';
    out << '\n';
  }

  RunReport report("verify");
  report.add_input("suite=" + a.suite + ";trials=" + std::to_string(options.trials) +
                   ";n_max=" + std::to_string(options.n_max) +
                   ";negative_control=" + (options.negative_control ? "1" : "0"));
  report.set_seed(options.seed);
  if (as_json) report.put("properties", properties);
  report.put("passed", static_cast<int>(results.size()) - failed);
  report.put("failed", failed);
  report.put("total", results.size());
  emit(report, clock, as_json, out);
  return failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal-speed Hamiltonians on complex flag manifolds"};
  app.name("optspeed");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the run report as JSON instead of key=value lines");

  SynthesizeArgs syn;
  auto* syn_cmd = app.add_subcommand("synthesize", "Build an optimal Hamiltonian between two states");
  syn_cmd->add_option("--from", syn.from, "Initial state file")->required();
  syn_cmd->add_option("--to", syn.to, "Target state file")->required();
  syn_cmd->add_option("--energy", syn.energy, "Energy uncertainty of the Hamiltonian")->required();
  syn_cmd->add_option("--family-seed", syn.family_seed, "Draw a random member of the optimal family");
  syn_cmd->add_option("--out", syn.out, "Output Hamiltonian file")->default_val("ham.json");

  CheckArgs chk;
  auto* chk_cmd = app.add_subcommand("check", "Classify a Hamiltonian relative to a state");
  chk_cmd->add_option("--ham", chk.ham, "Hamiltonian file")->required();
  chk_cmd->add_option("--state", chk.state, "State file")->required();

  EquigeodesicArgs eq;
  auto* eq_cmd = app.add_subcommand("equigeodesic", "Test the equigeodesic criteria for a vector");
  eq_cmd->add_option("--vector", eq.vector, "Skew-Hermitian traceless matrix file")->required();
  eq_cmd->add_option("--blocks", eq.blocks, "Block sizes, e.g. 1,2")->required();
  eq_cmd->add_option("--samples", eq.samples, "Random metrics for the variational test")
      ->default_val(16);
  eq_cmd->add_option("--seed", eq.seed, "Seed for the random metrics")->default_val(0);

  EvolveArgs ev;
  auto* ev_cmd = app.add_subcommand("evolve", "Sample the Schroedinger evolution on a uniform grid");
  ev_cmd->add_option("--ham", ev.ham, "Hamiltonian file")->required();
  ev_cmd->add_option("--state", ev.state, "State file (density matrix with --density)")->required();
  ev_cmd->add_option("--t0", ev.t0, "Start time")->default_val(0.0);
  ev_cmd->add_option("--t1", ev.t1, "End time")->required();
  ev_cmd->add_option("--steps", ev.steps, "Number of grid intervals")->default_val(100);
  ev_cmd->add_flag("--density", ev.density, "Evolve a density matrix");
  ev_cmd->add_option("--out", ev.out, "Output trajectory file")->default_val("traj.json");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run the seeded property suites");
  ver_cmd->add_option("--suite", ver.suite, "algebra, synthesis, evolution or all")
      ->default_val("all");
  ver_cmd->add_option("--trials", ver.options.trials, "Trials per property")->default_val(100);
  ver_cmd->add_option("--seed", ver.options.seed, "Base seed")->default_val(42);
  ver_cmd->add_option("--n-max", ver.options.n_max, "Largest dimension drawn")->default_val(8);
  ver_cmd->add_flag("--negative-control", ver.options.negative_control,
                    "Add a property that must fail");

  for (auto* cmd : {syn_cmd, chk_cmd, eq_cmd, ev_cmd, ver_cmd}) {
    cmd->add_flag("--json", as_json, "Print the run report as JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*syn_cmd) return synthesize(syn, as_json, out);
    if (*chk_cmd) return check(chk, as_json, out);
    if (*eq_cmd) return equigeodesic(eq, as_json, out);
    if (*ev_cmd) return evolve(ev, as_json, out);
    if (*ver_cmd) return verify(ver, as_json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kDimensionMismatch ? kExitDimensionMismatch : kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"optspeed"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace optspeed::cli
