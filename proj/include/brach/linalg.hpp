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

#ifndef BRACH_LINALG_HPP
#define BRACH_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "brach/errors.hpp"

namespace brach {

using Complex = std::complex<double>;

/// Numerical tolerances shared by every module.
struct Tolerances {
  /// ‖A − A†‖_F allowed, relative to max(1, ‖A‖_F).
  static constexpr double hermiticity = 1e-10;
  static constexpr double orthonormality = 1e-12;
  static constexpr double unit_norm = 1e-12;
  /// Off-diagonal Frobenius norm, relative to ‖A‖_F, at which Jacobi stops.
  static constexpr double jacobi_offdiag = 1e-14;
  static constexpr int jacobi_max_sweeps = 100;
};

/// Dense complex vector with finite entries.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim);
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries);

  std::size_t dim() const { return data_.size(); }
  Complex& operator[](std::size_t k) { return data_[k]; }
  const Complex& operator[](std::size_t k) const { return data_[k]; }
  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  double norm() const;

  ComplexVector& operator+=(const ComplexVector& other);
  ComplexVector& operator-=(const ComplexVector& other);
  ComplexVector& operator*=(Complex factor);

  static ComplexVector basis(std::size_t dim, std::size_t k);

 private:
  std::vector<Complex> data_;
};

ComplexVector operator+(ComplexVector a, const ComplexVector& b);
ComplexVector operator-(ComplexVector a, const ComplexVector& b);
ComplexVector operator*(Complex factor, ComplexVector v);

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex factor);

  static ComplexMatrix identity(std::size_t dim);
  /// |a⟩⟨b|
  static ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex factor, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v);

/// Eigenpairs of a Hermitian matrix; eigenvalues ascending.
struct EigenSystem {
  std::vector<double> eigenvalues;
  std::vector<ComplexVector> eigenvectors;
};

/// ⟨a|b⟩, conjugate-linear in `a`.
Complex inner_product(const ComplexVector& a, const ComplexVector& b);

/// ‖A − A†‖_F.
double hermiticity_defect(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a);

/// Cyclic complex Jacobi diagonalisation.
EigenSystem hermitian_eigensystem(const ComplexMatrix& a);

/// exp(i·s·A)·v through the eigensystem of A.
ComplexVector matrix_exponential_action(const ComplexMatrix& a, double s, const ComplexVector& v);

/// Same, reusing an eigensystem computed earlier.
ComplexVector matrix_exponential_action(const EigenSystem& es, double s, const ComplexVector& v);

/// exp(i·s·A) as a dense matrix.
ComplexMatrix matrix_exponential(const ComplexMatrix& a, double s);

}  // namespace brach

#endif  // BRACH_LINALG_HPP
