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

#ifndef BRACH_EVOLUTION_HPP
#define BRACH_EVOLUTION_HPP

#include <functional>
#include <optional>
#include <vector>

#include "brach/brachistochrone.hpp"

namespace brach {

/// Grid and tolerance settings for first_passage.
struct PassageConfig {
  static constexpr std::size_t grid_points = 2048;
  /// Bisection stops once the bracket is narrower than this fraction of t_max.
  static constexpr double relative_time_tolerance = 1e-9;
  static constexpr double default_threshold = 1.0 - 1e-9;
};

/// exp(+iHt/ħ)·ψ0.
StateVector propagate(const HermitianOperator& h, const StateVector& psi0, double t, double hbar = 1.0);

/// Diagonalises H once, then evaluates ψ(t) = Σ e^{iλ_k t/ħ} c_k v_k for any t.
///
/// The overlap with a fixed target reduces to a sum of n phases, so fidelity and its
/// time derivative cost O(n) per evaluation.
class SpectralPropagator {
 public:
  SpectralPropagator(const HermitianOperator& h, const StateVector& psi0, double hbar = 1.0);

  std::size_t dim() const { return coeffs_.size(); }
  StateVector state(double t) const;

  /// Precomputed projections of a target state onto the eigenbasis.
  class Target {
   public:
    /// |⟨target|ψ(t)⟩|²
    double fidelity(double t) const;
    /// d/dt |⟨target|ψ(t)⟩|²
    double fidelity_rate(double t) const;

   private:
    friend class SpectralPropagator;
    std::vector<double> frequencies_;
    std::vector<Complex> weights_;
  };

  Target target(const StateVector& target) const;

 private:
  EigenSystem es_;
  std::vector<Complex> coeffs_;
  double hbar_;
};

struct TrajectorySample {
  double t;
  StateVector state;
  double fidelity;
  double delta_h;
  double fs_speed;
};

/// `n_samples` uniform times on [0, t_max]. The Fubini–Study speed at t is the distance between
/// ψ(t − δ) and ψ(t + δ) divided by 2δ, with δ the sample spacing. Samples are evaluated in parallel.
std::vector<TrajectorySample> sample_trajectory(const HermitianOperator& h, const StateVector& psi0,
                                                const StateVector& target, double t_max,
                                                std::size_t n_samples, double hbar = 1.0);

/// Serial reference for sample_trajectory; results are identical.
std::vector<TrajectorySample> sample_trajectory_serial(const HermitianOperator& h,
                                                       const StateVector& psi0,
                                                       const StateVector& target, double t_max,
                                                       std::size_t n_samples, double hbar = 1.0);

struct FirstPassageResult {
  bool found = false;
  /// Earliest time with fidelity ≥ threshold (bisection on the crossing).
  std::optional<double> time;
  double fidelity_at_time = 0.0;
  /// Time of the fidelity maximum that follows the crossing: where the state actually reaches
  /// the target, as opposed to where it first enters the threshold neighbourhood.
  std::optional<double> arrival_time;
  double arrival_fidelity = 0.0;
  /// Largest fidelity seen on [0, t_max], including refined peaks.
  double max_fidelity = 0.0;
};

/// Coarse scan on PassageConfig::grid_points times, with every local fidelity maximum refined
/// so that narrow arrival windows between grid points are not missed, then bisection on the
/// first crossing of `threshold`.
FirstPassageResult first_passage(const HermitianOperator& h, const StateVector& psi0,
                                 const StateVector& target, double t_max,
                                 double threshold = PassageConfig::default_threshold,
                                 double hbar = 1.0);

FirstPassageResult first_passage(const SpectralPropagator::Target& fid, double t_max,
                                 double threshold = PassageConfig::default_threshold,
                                 std::size_t grid_points = PassageConfig::grid_points);

/// Fixed-step fourth-order Runge–Kutta for dψ/dt = (i/ħ)·H(t)·ψ. Used as an independent
/// oracle and for time-dependent Hamiltonians; the result is not renormalised.
ComplexVector integrate_rk4(const std::function<ComplexMatrix(double)>& h_of_t,
                            const ComplexVector& psi0, double t_end, std::size_t steps,
                            double hbar = 1.0);

}  // namespace brach

#endif  // BRACH_EVOLUTION_HPP
