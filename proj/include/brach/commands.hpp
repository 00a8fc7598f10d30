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

#ifndef BRACH_COMMANDS_HPP
#define BRACH_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "brach/audit.hpp"

namespace brach::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kDimensionMismatch = 3,
  kDegeneratePair = 4,
  kViolation = 5,
};

inline constexpr const char* kDegenerateMessage = "states coincide; tau = 0; H = 0";

enum class SchrodingerSign { plus, minus };

struct SolveOptions {
  std::string file_i;
  std::string file_f;
  double omega = 1.0;
  double hbar = 1.0;
  SpreadConvention convention = SpreadConvention::eq8;
  SchrodingerSign sign = SchrodingerSign::plus;
  std::string out = "-";
  bool strict = false;
};

struct EvolveOptions : SolveOptions {
  std::size_t samples = 256;
};

struct AuditOptions : SolveOptions {
  std::size_t trials = 500;
  std::size_t local_steps = 200;
  std::uint64_t seed = 42;
  double tmax_factor = 4.0;
  double threshold = 1.0 - 1e-6;
};

nlohmann::json solve_report(const BrachistochroneSolution& sol, SchrodingerSign sign);
std::string trajectory_csv(const std::vector<TrajectorySample>& samples);
nlohmann::json audit_report(const AuditReport& report, const AuditConfig& cfg, double omega,
                            SpreadConvention convention);

int cmd_distance(const std::string& file_a, const std::string& file_b, const std::string& out_path,
                 bool strict, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_evolve(const EvolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_audit(const AuditOptions& opts, std::ostream& out, std::ostream& err);

/// Parses the command line and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace brach::cli

#endif  // BRACH_COMMANDS_HPP
