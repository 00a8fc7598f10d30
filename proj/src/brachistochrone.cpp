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

#include "brach/brachistochrone.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace brach {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_decomposition(const PlaneDecomposition& d) {
  if (!(d.theta > 0.0) || d.theta > std::numbers::pi + 1e-12) {
    throw DomainError("plane decomposition has theta outside (0, pi]");
  }
}

}  // namespace

std::string_view to_string(SpreadConvention c) {
  return c == SpreadConvention::eq8 ? "eq8" : "saturating";
}

SpreadConvention parse_convention(std::string_view text) {
  if (text == "eq8") return SpreadConvention::eq8;
  if (text == "saturating") return SpreadConvention::saturating;
  throw DomainError("unknown spread convention '" + std::string(text) + "'");
}

HermitianOperator::HermitianOperator(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (!mat_.all_finite()) throw DomainError("HermitianOperator: non-finite entry");
  if (!is_hermitian(mat_)) throw NotHermitianError("HermitianOperator: matrix is not Hermitian");
}

double BrachistochroneSolution::coupling() const {
  return convention == SpreadConvention::eq8 ? omega : omega / decomposition.sin_half();
}

std::pair<StateVector, StateVector> axis_states(const PlaneDecomposition& d) {
  check_decomposition(d);
  const double c = d.cos_half();
  const double s = d.sin_half();
  const double r = 1.0 / std::numbers::sqrt2;
  const auto& psi_i = d.psi_i.vec();
  const auto& psi_f = d.psi_f_aligned.vec();

  ComplexVector plus = r * (Complex(1.0, c / s) * psi_i) - r * ((kI / s) * psi_f);
  ComplexVector minus = r * (Complex(1.0, -c / s) * psi_i) + r * ((kI / s) * psi_f);
  return {StateVector::normalized(std::move(plus)), StateVector::normalized(std::move(minus))};
}

HermitianOperator hamiltonian_from_axis(const StateVector& e_plus, const StateVector& e_minus,
                                        double lambda_plus, double lambda_minus) {
  if (e_plus.dim() != e_minus.dim()) throw DimensionError("hamiltonian_from_axis: dimension mismatch");
  if (std::abs(inner_product(e_plus, e_minus)) > 1e-10) {
    throw AxisError("hamiltonian_from_axis: axis states are not orthogonal");
  }
  if (lambda_plus == lambda_minus) {
    throw AxisError("hamiltonian_from_axis: eigenvalues must differ");
  }
  return HermitianOperator(lambda_plus * ComplexMatrix::outer(e_plus.vec(), e_plus.vec()) +
                           lambda_minus * ComplexMatrix::outer(e_minus.vec(), e_minus.vec()));
}

HermitianOperator expanded_hamiltonian(const PlaneDecomposition& d, double lambda_plus,
                                       double lambda_minus) {
  check_decomposition(d);
  const double c = d.cos_half();
  const double s = d.sin_half();
  const double s2 = s * s;
  const auto& psi_i = d.psi_i.vec();
  const auto& psi_f = d.psi_f_aligned.vec();

  const Complex diag = (lambda_plus + lambda_minus) / (2.0 * s2);
  const Complex if_coeff = 0.5 * lambda_plus * (kI / s - c / s2) - 0.5 * lambda_minus * (kI / s + c / s2);
  const Complex fi_coeff = 0.5 * lambda_plus * (-kI / s - c / s2) - 0.5 * lambda_minus * (-kI / s + c / s2);

  ComplexMatrix h = diag * (ComplexMatrix::outer(psi_i, psi_i) + ComplexMatrix::outer(psi_f, psi_f));
  h += if_coeff * ComplexMatrix::outer(psi_i, psi_f);
  h += fi_coeff * ComplexMatrix::outer(psi_f, psi_i);
  return HermitianOperator(std::move(h));
}

HermitianOperator closed_form_hamiltonian(const PlaneDecomposition& d, double xi) {
  check_decomposition(d);
  const Complex coeff = kI * xi / (2.0 * d.sin_half());
  const auto& psi_i = d.psi_i.vec();
  const auto& psi_f = d.psi_f_aligned.vec();
  return HermitianOperator(coeff * ComplexMatrix::outer(psi_i, psi_f) -
                           coeff * ComplexMatrix::outer(psi_f, psi_i));
}

double minimal_time(double theta, double omega, double hbar, SpreadConvention convention) {
  if (!(theta > 0.0) || theta > std::numbers::pi + 1e-12) {
    throw DomainError("minimal_time: theta must lie in (0, pi]");
  }
  if (!(omega > 0.0)) throw DomainError("minimal_time: omega must be positive");
  if (!(hbar > 0.0)) throw DomainError("minimal_time: hbar must be positive");
  if (convention == SpreadConvention::saturating) return hbar * theta / (2.0 * omega);
  return hbar * theta / (2.0 * omega * std::sin(0.5 * theta));
}

BrachistochroneSolution optimal_hamiltonian(const PlaneDecomposition& d, double omega,
                                            SpreadConvention convention, double hbar) {
  check_decomposition(d);
  if (!(omega > 0.0)) throw DomainError("optimal_hamiltonian: omega must be positive");
  if (!(hbar > 0.0)) throw DomainError("optimal_hamiltonian: hbar must be positive");

  const double s = d.sin_half();
  const double kappa = convention == SpreadConvention::eq8 ? omega : omega / s;
  // ξ/(2 sin(θ/2)) = κ, so λ± = ±ξ/2 = ±κ·sin(θ/2).
  const double xi = 2.0 * kappa * s;
  auto [e_plus, e_minus] = axis_states(d);

  return BrachistochroneSolution{
      d,
      omega,
      hbar,
      convention,
      closed_form_hamiltonian(d, xi),
      std::move(e_plus),
      std::move(e_minus),
      0.5 * xi,
      -0.5 * xi,
      kappa * s,
      minimal_time(d.theta, omega, hbar, convention),
  };
}

double energy_uncertainty(const HermitianOperator& h, const StateVector& psi) {
  if (h.dim() != psi.dim()) throw DimensionError("energy_uncertainty: dimension mismatch");
  const ComplexVector h_psi = h.mat() * psi.vec();
  const double mean = inner_product(psi.vec(), h_psi).real();
  const double second = std::norm(h_psi.norm());
  return std::sqrt(std::max(0.0, second - mean * mean));
}

StateVector analytic_state(const BrachistochroneSolution& sol, double t) {
  if (t < 0.0) throw DomainError("analytic_state: t must be non-negative");
  const auto& d = sol.decomposition;
  const double c = d.cos_half();
  const double s = d.sin_half();
  const double phase = sol.coupling() * t * s / sol.hbar;
  const double a_i = std::cos(phase) - (c / s) * std::sin(phase);
  const double a_f = std::sin(phase) / s;
  ComplexVector out = Complex(a_i) * d.psi_i.vec() + Complex(a_f) * d.psi_f_aligned.vec();
  return StateVector::normalized(std::move(out));
}

HermitianOperator apply_gauge(const BrachistochroneSolution& sol,
                              const std::function<double(double)>& h_fn, double t) {
  const double shift = h_fn(t);
  if (!std::isfinite(shift)) throw DomainError("apply_gauge: gauge term is not finite");
  return HermitianOperator(sol.hamiltonian.mat() +
                           Complex(shift) * ComplexMatrix::identity(sol.hamiltonian.dim()));
}

}  // namespace brach
