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

#ifndef BRACH_AUDIT_HPP
#define BRACH_AUDIT_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "brach/evolution.hpp"

namespace brach {

using Rng = std::mt19937_64;

/// Independent deterministic stream for trial `index` of a run seeded with `seed`.
Rng trial_stream(std::uint64_t seed, std::uint64_t index);

/// Haar-random unitary: Gram–Schmidt on a matrix of standard complex Gaussians.
/// Columns are the orthonormal vectors.
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng);

/// A Hamiltonian U·diag(λ)·U† with extreme eigenvalues pinned to ±spread/2.
struct Competitor {
  ComplexMatrix basis;
  std::vector<double> eigenvalues;

  HermitianOperator hamiltonian() const;
};

Competitor random_competitor(std::size_t dim, double spread, Rng& rng);

HermitianOperator random_constrained_hamiltonian(std::size_t dim, double spread, Rng& rng);

/// Rotates the eigenbasis by exp(i·scale·G) for a random Hermitian G of unit Frobenius norm;
/// eigenvalues are left as they are.
Competitor perturb_competitor(const Competitor& c, double scale, Rng& rng);

struct AuditConfig {
  std::size_t n_random = 500;
  std::size_t n_local_steps = 200;
  std::uint64_t seed = 42;
  double t_max_factor = 4.0;
  double threshold = 1.0 - 1e-6;
  /// Eigenvalue spread for competitors; 0 selects the optimal Hamiltonian's own spread.
  double spread = 0.0;
  /// Competitors beat the optimum only by more than this fraction of τ*.
  double relative_tolerance = 1e-4;
  double initial_step = 0.1;
  std::size_t rejections_per_halving = 25;
  /// Extra Hamiltonians raced alongside the random ones.
  std::vector<HermitianOperator> injected;

  void validate() const;
};

enum class Verdict { optimal_confirmed, violation_found };

std::string_view to_string(Verdict v);

/// Result of racing one competitor to the target.
struct TrialOutcome {
  bool arrived = false;
  double time = 0.0;
  double max_fidelity = 0.0;

  /// Strict ordering: arrivals beat non-arrivals, earlier arrivals beat later ones,
  /// and among non-arrivals the closer approach wins.
  bool better_than(const TrialOutcome& other) const;
};

struct AuditReport {
  double tau_star = 0.0;
  /// Earliest time any Hamiltonian with the matched spread can bring the fidelity to the
  /// threshold; equals the optimal trajectory's own threshold crossing.
  double tau_reference = 0.0;
  double spread = 0.0;
  double t_max = 0.0;
  std::optional<double> best_competitor_time;
  std::size_t n_beaten = 0;
  std::size_t n_arrived = 0;
  Verdict verdict = Verdict::optimal_confirmed;
  std::size_t trials = 0;
  /// (t − τ_ref)/τ* for every competitor that arrived, in trial order.
  std::vector<double> gaps;
  /// Best outcome after each hill-climb step.
  std::vector<TrialOutcome> climb_history;
};

/// Races competitors of the given spread against the optimal Hamiltonian for (ψ_I, ψ_F).
/// Random trials run in parallel; each owns the stream trial_stream(seed, index).
AuditReport run_audit(const StateVector& psi_i, const StateVector& psi_f, double omega,
                      SpreadConvention convention, const AuditConfig& cfg, double hbar = 1.0);

/// The random-trial phase alone, in parallel and in serial form; outputs are identical.
std::vector<TrialOutcome> race_random_competitors(const StateVector& psi_i, const StateVector& target,
                                                  std::size_t dim, const AuditConfig& cfg, double spread,
                                                  double t_max, double hbar);
std::vector<TrialOutcome> race_random_competitors_serial(const StateVector& psi_i,
                                                         const StateVector& target, std::size_t dim,
                                                         const AuditConfig& cfg, double spread,
                                                         double t_max, double hbar);

TrialOutcome race(const HermitianOperator& h, const StateVector& psi_i, const StateVector& target,
                  double t_max, double threshold, double hbar);

}  // namespace brach

#endif  // BRACH_AUDIT_HPP
