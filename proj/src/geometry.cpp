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

#include "brach/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace brach {

StateVector::StateVector(ComplexVector vec) : vec_(std::move(vec)) {
  if (vec_.dim() == 0) throw DimensionError("StateVector: empty vector");
  const double n = vec_.norm();
  if (std::abs(n - 1.0) > Tolerances::unit_norm) {
    throw DomainError("StateVector: norm " + std::to_string(n) + " is not 1");
  }
}

StateVector StateVector::normalized(ComplexVector vec) {
  const double n = vec.norm();
  if (!(n > 0.0)) throw DomainError("StateVector: cannot normalise the zero vector");
  vec *= 1.0 / n;
  return StateVector(std::move(vec));
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

double fs_distance(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("fs_distance: dimension mismatch");
  // 2·arccos|⟨a|b⟩| evaluated as 2·atan2(‖b − ⟨a|b⟩a‖, |⟨a|b⟩|), which keeps full relative
  // precision for nearby rays where arccos near 1 loses half the digits.
  const Complex overlap = inner_product(a, b);
  const double cos_half = std::clamp(std::abs(overlap), 0.0, 1.0);
  const double sin_half = (b.vec() - overlap * a.vec()).norm();
  return 2.0 * std::atan2(sin_half, cos_half);
}

double PlaneDecomposition::cos_half() const { return std::cos(0.5 * theta); }
double PlaneDecomposition::sin_half() const { return std::sin(0.5 * theta); }

ComplexMatrix PlaneDecomposition::plane_projector() const {
  return ComplexMatrix::outer(psi_i.vec(), psi_i.vec()) +
         ComplexMatrix::outer(psi_bar.vec(), psi_bar.vec());
}

namespace {

// Phase that makes the largest-magnitude component of v real positive.
Complex largest_component_phase(const ComplexVector& v) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < v.dim(); ++k)
    if (std::abs(v[k]) > std::abs(v[best])) best = k;
  return std::conj(v[best]) / std::abs(v[best]);
}

}  // namespace

PlaneDecomposition decompose_plane(const StateVector& psi_i, const StateVector& psi_f,
                                   double parallel_epsilon) {
  if (psi_i.dim() != psi_f.dim()) throw DimensionError("decompose_plane: dimension mismatch");

  const Complex overlap = inner_product(psi_i, psi_f);
  const double magnitude = std::abs(overlap);
  const Complex align = magnitude < kOrthogonalOverlap ? largest_component_phase(psi_f.vec())
                                                       : std::conj(overlap) / magnitude;
  ComplexVector f_aligned = align * psi_f.vec();

  // Component of ψ_F orthogonal to ψ_I, Gram–Schmidt applied twice.
  ComplexVector residual = f_aligned;
  for (int pass = 0; pass < 2; ++pass) {
    residual -= inner_product(psi_i.vec(), residual) * psi_i.vec();
  }
  const double residual_norm = residual.norm();
  const double cos_half = std::clamp(inner_product(psi_i.vec(), f_aligned).real(), 0.0, 1.0);
  const double theta = 2.0 * std::atan2(residual_norm, cos_half);

  if (!(theta > parallel_epsilon)) {
    throw DegeneratePairError("decompose_plane: states lie on the same ray (theta = " +
                              std::to_string(theta) + ")");
  }
  residual *= 1.0 / residual_norm;

  return PlaneDecomposition{psi_i, StateVector::normalized(std::move(f_aligned)),
                            StateVector(std::move(residual)), theta, kCanonicalPhi};
}

}  // namespace brach
