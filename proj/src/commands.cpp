// Copyright 2026 The brach Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "brach/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "brach/state_io.hpp"

namespace brach::cli {

using nlohmann::json;

namespace {

// Runs `body`, translating library errors into the documented exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kDimensionMismatch;
  } catch (const DegeneratePairError&) {
    err << kDegenerateMessage << '\n';
    return kDegeneratePair;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::pair<StateVector, StateVector> load_pair(const SolveOptions& opts, std::ostream& err) {
  StateVector psi_i = io::read_state_file(opts.file_i, opts.strict, err);
  StateVector psi_f = io::read_state_file(opts.file_f, opts.strict, err);
  if (psi_i.dim() != psi_f.dim()) {
    throw DimensionError("initial and final states have different dimensions (" +
                         std::to_string(psi_i.dim()) + " vs " + std::to_string(psi_f.dim()) + ")");
  }
  return {std::move(psi_i), std::move(psi_f)};
}

BrachistochroneSolution solve_pair(const std::pair<StateVector, StateVector>& pair, const SolveOptions& opts) {
  return optimal_hamiltonian(decompose_plane(pair.first, pair.second), opts.omega, opts.convention, opts.hbar);
}

json gap_summary(std::vector<double> gaps) {
  if (gaps.empty()) return nullptr;
  std::sort(gaps.begin(), gaps.end());
  const std::size_t n = gaps.size();
  const double median = n % 2 == 1 ? gaps[n / 2] : 0.5 * (gaps[n / 2 - 1] + gaps[n / 2]);
  return json{{"count", n}, {"min", gaps.front()}, {"median", median}, {"max", gaps.back()}};
}

}  // namespace

json solve_report(const BrachistochroneSolution& sol, SchrodingerSign sign) {
  const double flip = sign == SchrodingerSign::minus ? -1.0 : 1.0;
  return json{
      {"theta", sol.decomposition.theta},
      {"phi", sol.decomposition.phi},
      {"omega", sol.omega},
      {"hbar", sol.hbar},
      {"convention", std::string(to_string(sol.convention))},
      {"schrodinger_sign", sign == SchrodingerSign::minus ? "minus" : "plus"},
      {"hamiltonian", io::matrix_to_json(Complex(flip) * sol.hamiltonian.mat())},
      {"e_plus", io::state_to_json(sol.e_plus)},
      {"e_minus", io::state_to_json(sol.e_minus)},
      {"lambda_plus", flip * sol.lambda_plus},
      {"lambda_minus", flip * sol.lambda_minus},
      {"xi", flip * sol.xi()},
      {"delta_h", sol.delta_h},
      {"tau", sol.tau},
  };
}

std::string trajectory_csv(const std::vector<TrajectorySample>& samples) {
  std::string csv = "t,fidelity_to_target,delta_h,fs_speed";
  const std::size_t dim = samples.empty() ? 0 : samples.front().state.dim();
  for (std::size_t k = 0; k < dim; ++k) csv += ",re_" + std::to_string(k) + ",im_" + std::to_string(k);
  csv += '\n';
  for (const auto& s : samples) {
    csv += io::format_double(s.t);
    csv += ',' + io::format_double(s.fidelity);
    csv += ',' + io::format_double(s.delta_h);
    csv += ',' + io::format_double(s.fs_speed);
    for (std::size_t k = 0; k < dim; ++k) {
      csv += ',' + io::format_double(s.state[k].real());
      csv += ',' + io::format_double(s.state[k].imag());
    }
    csv += '\n';
  }
  return csv;
}

json audit_report(const AuditReport& report, const AuditConfig& cfg, double omega,
                  SpreadConvention convention) {
  return json{
      {"verdict", std::string(to_string(report.verdict))},
      {"tau_star", report.tau_star},
      {"tau_reference", report.tau_reference},
      {"best_competitor_time",
       report.best_competitor_time ? json(*report.best_competitor_time) : json(nullptr)},
      {"n_beaten", report.n_beaten},
      {"n_arrived", report.n_arrived},
      {"trials", report.trials},
      {"spread", report.spread},
      {"t_max", report.t_max},
      {"relative_gap", gap_summary(report.gaps)},
      {"config",
       {{"omega", omega},
        {"convention", std::string(to_string(convention))},
        {"n_random", cfg.n_random},
        {"n_local_steps", cfg.n_local_steps},
        {"seed", cfg.seed},
        {"t_max_factor", cfg.t_max_factor},
        {"threshold", cfg.threshold},
        {"relative_tolerance", cfg.relative_tolerance}}},
  };
}

int cmd_distance(const std::string& file_a, const std::string& file_b, const std::string& out_path,
                 bool strict, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const StateVector a = io::read_state_file(file_a, strict, err);
    const StateVector b = io::read_state_file(file_b, strict, err);
    const double theta = fs_distance(a, b);
    const json doc{{"theta_rad", theta}, {"theta_deg", theta * 180.0 / std::numbers::pi}};
    io::write_output(out_path, dump(doc), out);
    return kOk;
  });
}

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BrachistochroneSolution sol = solve_pair(load_pair(opts, err), opts);
    io::write_output(opts.out, dump(solve_report(sol, opts.sign)), out);
    return kOk;
  });
}

int cmd_evolve(const EvolveOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.samples < 2) throw DomainError("--samples must be at least 2");
    const auto pair = load_pair(opts, err);
    const BrachistochroneSolution sol = solve_pair(pair, opts);
    const auto samples = sample_trajectory(sol.hamiltonian, pair.first, pair.second, sol.tau,
                                           opts.samples, sol.hbar);
    io::write_output(opts.out, trajectory_csv(samples), out);
    return kOk;
  });
}

int cmd_audit(const AuditOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto [psi_i, psi_f] = load_pair(opts, err);
    AuditConfig cfg;
    cfg.n_random = opts.trials;
    cfg.n_local_steps = opts.local_steps;
    cfg.seed = opts.seed;
    cfg.t_max_factor = opts.tmax_factor;
    cfg.threshold = opts.threshold;
    const AuditReport report = run_audit(psi_i, psi_f, opts.omega, opts.convention, cfg, opts.hbar);
    io::write_output(opts.out, dump(audit_report(report, cfg, opts.omega, opts.convention)), out);
    if (report.verdict == Verdict::violation_found) {
      err << "VIOLATION: " << report.n_beaten << " competitor(s) reached the target before the optimum\n";
      return kViolation;
    }
    return kOk;
  });
}

namespace {

void add_solve_flags(CLI::App& cmd, SolveOptions& opts, std::string& convention, std::string& sign) {
  cmd.add_option("initial", opts.file_i, "Initial state file")->required();
  cmd.add_option("final", opts.file_f, "Final state file")->required();
  cmd.add_option("--omega", opts.omega, "Eigenvalue half-spread bound")->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--hbar", opts.hbar, "Reduced Planck constant")->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--convention", convention, "Spread convention")->capture_default_str()
      ->check(CLI::IsMember({"eq8", "saturating"}));
  cmd.add_option("--schrodinger-sign", sign, "Sign in exp(±iHt/hbar) for the reported H")
      ->capture_default_str()->check(CLI::IsMember({"plus", "minus"}));
  cmd.add_option("--out", opts.out, "Output path, '-' for standard output")->capture_default_str();
  cmd.add_flag("--strict", opts.strict, "Reject state files that are not normalised");
}

void finish_solve_flags(SolveOptions& opts, const std::string& convention, const std::string& sign) {
  opts.convention = parse_convention(convention);
  opts.sign = sign == "minus" ? SchrodingerSign::minus : SchrodingerSign::plus;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-optimal Hamiltonians for pure-state transfer"};
  app.require_subcommand(1);

  std::string file_a, file_b, distance_out = "-";
  bool distance_strict = false;
  auto* distance = app.add_subcommand("distance", "Fubini-Study distance between two states");
  distance->add_option("a", file_a, "First state file")->required();
  distance->add_option("b", file_b, "Second state file")->required();
  distance->add_option("--out", distance_out, "Output path, '-' for standard output")->capture_default_str();
  distance->add_flag("--strict", distance_strict, "Reject state files that are not normalised");

  SolveOptions solve_opts;
  std::string solve_conv = "eq8", solve_sign = "plus";
  auto* solve = app.add_subcommand("solve", "Construct the optimal Hamiltonian and transit time");
  add_solve_flags(*solve, solve_opts, solve_conv, solve_sign);

  EvolveOptions evolve_opts;
  std::string evolve_conv = "eq8", evolve_sign = "plus";
  auto* evolve = app.add_subcommand("evolve", "Write the optimal trajectory as CSV");
  add_solve_flags(*evolve, evolve_opts, evolve_conv, evolve_sign);
  evolve->add_option("--samples", evolve_opts.samples, "Number of time samples")->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));

  AuditOptions audit_opts;
  std::string audit_conv = "eq8", audit_sign = "plus";
  auto* audit = app.add_subcommand("audit", "Race random competitors against the optimum");
  add_solve_flags(*audit, audit_opts, audit_conv, audit_sign);
  audit->add_option("--trials", audit_opts.trials, "Random competitors")->capture_default_str();
  audit->add_option("--local-steps", audit_opts.local_steps, "Hill-climb steps")->capture_default_str();
  audit->add_option("--seed", audit_opts.seed, "Random seed")->capture_default_str();
  audit->add_option("--tmax-factor", audit_opts.tmax_factor, "Race horizon in units of tau")
      ->capture_default_str();
  audit->add_option("--threshold", audit_opts.threshold, "Arrival fidelity")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n' << "Run with --help for usage.\n";
    return kUsage;
  }

  if (*distance) return cmd_distance(file_a, file_b, distance_out, distance_strict, out, err);
  if (*solve) {
    finish_solve_flags(solve_opts, solve_conv, solve_sign);
    return cmd_solve(solve_opts, out, err);
  }
  if (*evolve) {
    finish_solve_flags(evolve_opts, evolve_conv, evolve_sign);
    return cmd_evolve(evolve_opts, out, err);
  }
  finish_solve_flags(audit_opts, audit_conv, audit_sign);
  return cmd_audit(audit_opts, out, err);
}

}  // namespace brach::cli
