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

#ifndef BRACH_GEOMETRY_HPP
#define BRACH_GEOMETRY_HPP

#include "brach/linalg.hpp"

namespace brach {

/// A unit vector representing a pure state.
class StateVector {
 public:
  /// Wraps `vec`, which must already have unit norm.
  explicit StateVector(ComplexVector vec);

  /// Rescales `vec` to unit norm. Throws DomainError for the zero vector.
  static StateVector normalized(ComplexVector vec);

  std::size_t dim() const { return vec_.dim(); }
  const ComplexVector& vec() const { return vec_; }
  const Complex& operator[](std::size_t k) const { return vec_[k]; }

 private:
  ComplexVector vec_;
};

inline Complex inner_product(const StateVector& a, const StateVector& b) {
  return inner_product(a.vec(), b.vec());
}

/// |⟨a|b⟩|²
double fidelity(const StateVector& a, const StateVector& b);

/// Fubini–Study angle 2·arccos|⟨a|b⟩| in [0, π].
double fs_distance(const StateVector& a, const StateVector& b);

/// The pair (ψ_I, ψ_F) written in the orthonormal frame {ψ_I, ψ̄_I} of the plane they span:
///
///     ψ_F ~ cos(θ/2)·ψ_I + e^{i(φ+π/2)}·sin(θ/2)·ψ̄_I
///
/// ψ_F is phase-aligned so ⟨ψ_I|ψ_F⟩ is real and non-negative, which fixes φ = 3π/2
/// and makes the phase factor in front of ψ̄_I equal to one.
struct PlaneDecomposition {
  StateVector psi_i;
  StateVector psi_f_aligned;
  StateVector psi_bar;
  double theta;
  double phi;

  double cos_half() const;
  double sin_half() const;
  /// Projector onto span{ψ_I, ψ_F}.
  ComplexMatrix plane_projector() const;
};

/// Canonical value of φ produced by decompose_plane.
inline constexpr double kCanonicalPhi = 4.71238898038468985769;  // 3π/2

/// Pairs closer than this (radians) are treated as the same ray.
inline constexpr double kParallelEpsilon = 1e-9;

/// Overlap magnitude below which the pair is treated as orthogonal for phase alignment.
inline constexpr double kOrthogonalOverlap = 1e-15;

PlaneDecomposition decompose_plane(const StateVector& psi_i, const StateVector& psi_f,
                                   double parallel_epsilon = kParallelEpsilon);

}  // namespace brach

#endif  // BRACH_GEOMETRY_HPP
