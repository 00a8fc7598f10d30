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

#ifndef BRACH_BRACHISTOCHRONE_HPP
#define BRACH_BRACHISTOCHRONE_HPP

#include <functional>
#include <string_view>
#include <utility>

#include "brach/geometry.hpp"

namespace brach {

/// How the eigenvalue-spread bound ω is applied to the optimal Hamiltonian.
///
/// `eq8` uses H = iω|ψ_I⟩⟨ψ_F| − iω|ψ_F⟩⟨ψ_I| exactly, whose eigenvalues are ±ω·sin(θ/2).
/// `saturating` divides that operator by sin(θ/2) so the eigenvalues are exactly ±ω.
enum class SpreadConvention { eq8, saturating };

std::string_view to_string(SpreadConvention c);
/// Accepts "eq8" or "saturating"; throws DomainError otherwise.
SpreadConvention parse_convention(std::string_view text);

/// A dense matrix checked to be Hermitian on construction.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix mat);

  std::size_t dim() const { return mat_.dim(); }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

struct BrachistochroneSolution {
  PlaneDecomposition decomposition;
  double omega;
  double hbar;
  SpreadConvention convention;
  HermitianOperator hamiltonian;
  StateVector e_plus;
  StateVector e_minus;
  double lambda_plus;
  double lambda_minus;
  double delta_h;
  double tau;

  /// Coupling κ in H = iκ|ψ_I⟩⟨ψ_F| + h.c.; ω for eq8, ω/sin(θ/2) for saturating.
  double coupling() const;
  /// ξ = λ+ − λ−.
  double xi() const { return lambda_plus - lambda_minus; }
};

/// Rotation-axis eigenstates E± built from ψ_I and the aligned ψ_F:
///   E± = [(1 ± i·cot(θ/2))·ψ_I ∓ (i/sin(θ/2))·ψ_F] / √2
std::pair<StateVector, StateVector> axis_states(const PlaneDecomposition& d);

/// λ+|E+⟩⟨E+| + λ−|E−⟩⟨E−|.
HermitianOperator hamiltonian_from_axis(const StateVector& e_plus, const StateVector& e_minus,
                                        double lambda_plus, double lambda_minus);

/// The same operator expanded over |ψ_I⟩⟨ψ_I|, |ψ_F⟩⟨ψ_F|, |ψ_I⟩⟨ψ_F| and |ψ_F⟩⟨ψ_I|.
HermitianOperator expanded_hamiltonian(const PlaneDecomposition& d, double lambda_plus,
                                       double lambda_minus);

/// Symmetric case λ± = ±ξ/2: iξ/(2 sin(θ/2))·(|ψ_I⟩⟨ψ_F| − |ψ_F⟩⟨ψ_I|).
HermitianOperator closed_form_hamiltonian(const PlaneDecomposition& d, double xi);

BrachistochroneSolution optimal_hamiltonian(const PlaneDecomposition& d, double omega,
                                            SpreadConvention convention = SpreadConvention::eq8,
                                            double hbar = 1.0);

double minimal_time(double theta, double omega, double hbar,
                    SpreadConvention convention = SpreadConvention::eq8);

/// Standard deviation of `h` in `psi`.
double energy_uncertainty(const HermitianOperator& h, const StateVector& psi);

/// Closed-form state along the optimal trajectory, ψ(0) = ψ_I and ψ(τ) = ψ_F (aligned).
StateVector analytic_state(const BrachistochroneSolution& sol, double t);

/// H + h(t)·1, the gauge-shifted Hamiltonian at time t.
HermitianOperator apply_gauge(const BrachistochroneSolution& sol,
                              const std::function<double(double)>& h_fn, double t);

}  // namespace brach

#endif  // BRACH_BRACHISTOCHRONE_HPP
