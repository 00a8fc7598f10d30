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

#include "brach/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace brach {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

// ---------------------------------------------------------------------------
// ComplexVector

ComplexVector::ComplexVector(std::size_t dim) : data_(dim) {}

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(std::move(entries)) {
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw DomainError("ComplexVector: non-finite entry");
  }
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : ComplexVector(std::vector<Complex>(entries)) {}

double ComplexVector::norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
  require_same_dim(dim(), other.dim(), "vector add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
  require_same_dim(dim(), other.dim(), "vector subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexVector& ComplexVector::operator*=(Complex factor) {
  for (auto& z : data_) z *= factor;
  return *this;
}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t k) {
  ComplexVector v(dim);
  v[k] = 1.0;
  return v;
}

ComplexVector operator+(ComplexVector a, const ComplexVector& b) { return a += b; }
ComplexVector operator-(ComplexVector a, const ComplexVector& b) { return a -= b; }
ComplexVector operator*(Complex factor, ComplexVector v) { return v *= factor; }

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), data_() {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("ComplexMatrix: rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!all_finite()) throw DomainError("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

bool ComplexMatrix::all_finite() const { return std::all_of(data_.begin(), data_.end(), finite); }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex factor) {
  for (auto& z : data_) z *= factor;
  return *this;
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.dim(), b.dim(), "outer product");
  ComplexMatrix m(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex factor, ComplexMatrix m) { return m *= factor; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
  require_same_dim(a.dim(), v.dim(), "matrix-vector product");
  ComplexVector out(v.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < a.dim(); ++c) acc += a(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------

Complex inner_product(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner_product");
  Complex acc = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

double hermiticity_defect(const ComplexMatrix& a) { return (a - a.adjoint()).frobenius_norm(); }

bool is_hermitian(const ComplexMatrix& a) {
  return hermiticity_defect(a) <= Tolerances::hermiticity * std::max(1.0, a.frobenius_norm());
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& input) {
  if (!input.all_finite()) throw DomainError("hermitian_eigensystem: non-finite entry");
  if (!is_hermitian(input)) {
    throw NotHermitianError("hermitian_eigensystem: matrix is not Hermitian (defect " +
                            std::to_string(hermiticity_defect(input)) + ")");
  }
  const std::size_t n = input.dim();
  // Work on the exactly Hermitian part so rounding in the input cannot bias the rotations.
  ComplexMatrix a = 0.5 * (input + input.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = a.frobenius_norm();
  auto off_norm = [&] {
    double sum = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) sum += std::norm(a(p, q));
    return std::sqrt(sum);
  };

  int sweep = 0;
  while (off_norm() > Tolerances::jacobi_offdiag * scale) {
    if (++sweep > Tolerances::jacobi_max_sweeps) {
      throw ConvergenceError("hermitian_eigensystem: Jacobi sweeps exhausted");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        // Phase e^{-iα} on row/column q makes the pivot real; then a real rotation zeroes it.
        const Complex phase = std::conj(a(p, q)) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * phase;
        const Complex jqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem es;
  es.eigenvalues.reserve(n);
  es.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    es.eigenvalues.push_back(a(k, k).real());
    ComplexVector col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v(r, k);
    es.eigenvectors.push_back(std::move(col));
  }
  return es;
}

ComplexVector matrix_exponential_action(const EigenSystem& es, double s, const ComplexVector& v) {
  if (es.eigenvectors.empty()) return v;
  require_same_dim(es.eigenvectors.front().dim(), v.dim(), "matrix_exponential_action");
  ComplexVector out(v.dim());
  for (std::size_t k = 0; k < es.eigenvalues.size(); ++k) {
    const Complex coeff = std::polar(1.0, s * es.eigenvalues[k]) * inner_product(es.eigenvectors[k], v);
    const auto& vk = es.eigenvectors[k];
    for (std::size_t r = 0; r < v.dim(); ++r) out[r] += coeff * vk[r];
  }
  return out;
}

ComplexVector matrix_exponential_action(const ComplexMatrix& a, double s, const ComplexVector& v) {
  require_same_dim(a.dim(), v.dim(), "matrix_exponential_action");
  if (s == 0.0) {
    if (!is_hermitian(a)) throw NotHermitianError("matrix_exponential_action: matrix is not Hermitian");
    return v;
  }
  return matrix_exponential_action(hermitian_eigensystem(a), s, v);
}

ComplexMatrix matrix_exponential(const ComplexMatrix& a, double s) {
  const EigenSystem es = hermitian_eigensystem(a);
  ComplexMatrix out(a.dim());
  for (std::size_t k = 0; k < es.eigenvalues.size(); ++k) {
    out += std::polar(1.0, s * es.eigenvalues[k]) *
           ComplexMatrix::outer(es.eigenvectors[k], es.eigenvectors[k]);
  }
  return out;
}

}  // namespace brach
