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

#ifndef BRACH_TESTS_SUPPORT_HPP
#define BRACH_TESTS_SUPPORT_HPP

// Generators and independent oracles shared by the test suites.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "brach/brachistochrone.hpp"

namespace brach::testing {

using Gen = std::mt19937_64;

inline ComplexVector gaussian_vector(std::size_t dim, Gen& gen) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double re = g(gen);
    const double im = g(gen);
    v[k] = Complex(re, im);
  }
  return v;
}

inline StateVector random_state(std::size_t dim, Gen& gen) {
  return StateVector::normalized(gaussian_vector(dim, gen));
}

inline ComplexMatrix random_hermitian(std::size_t dim, Gen& gen, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    m(r, r) = g(gen);
    for (std::size_t c = r + 1; c < dim; ++c) {
      const double re = g(gen);
      const double im = g(gen);
      m(r, c) = Complex(re, im);
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

inline std::size_t random_dim(Gen& gen, std::size_t lo = 2, std::size_t hi = 8) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(gen);
}

inline double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

inline double frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).frobenius_norm(); }

/// Distance between rays: minimised over the global phase.
inline double ray_diff(const ComplexVector& a, const ComplexVector& b) {
  const Complex ov = inner_product(a, b);
  const Complex phase = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex(1.0);
  return max_abs_diff(phase * a, b);
}

/// Fidelity |⟨a|b⟩|² summed term by term without the library's inner product.
inline double fidelity_oracle(const ComplexVector& a, const ComplexVector& b) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
  }
  return re * re + im * im;
}

/// Classical RK4 for dψ/dt = (i/ħ)·H·ψ with a constant H, written out independently.
inline ComplexVector rk4_constant(const ComplexMatrix& h, const ComplexVector& psi0, double t, std::size_t steps,
                                  double hbar = 1.0) {
  const std::size_t n = h.dim();
  const double dt = t / static_cast<double>(steps);
  auto f = [&](const std::vector<Complex>& psi) {
    std::vector<Complex> out(n);
    for (std::size_t r = 0; r < n; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < n; ++c) acc += h(r, c) * psi[c];
      out[r] = Complex(0.0, 1.0 / hbar) * acc;
    }
    return out;
  };
  std::vector<Complex> psi(n);
  for (std::size_t k = 0; k < n; ++k) psi[k] = psi0[k];
  for (std::size_t s = 0; s < steps; ++s) {
    auto axpy = [&](const std::vector<Complex>& k, double a) {
      std::vector<Complex> out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = psi[i] + a * k[i];
      return out;
    };
    const auto k1 = f(psi);
    const auto k2 = f(axpy(k1, 0.5 * dt));
    const auto k3 = f(axpy(k2, 0.5 * dt));
    const auto k4 = f(axpy(k3, dt));
    for (std::size_t i = 0; i < n; ++i) psi[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return ComplexVector(psi);
}

/// |0⟩, |1⟩ and (|0⟩+|1⟩)/√2 in dimension `dim`.
inline StateVector ket0(std::size_t dim = 2) { return StateVector(ComplexVector::basis(dim, 0)); }
inline StateVector ket1(std::size_t dim = 2) { return StateVector(ComplexVector::basis(dim, 1)); }
inline StateVector ket_plus(std::size_t dim = 2) {
  ComplexVector v(dim);
  v[0] = v[1] = 1.0 / std::numbers::sqrt2;
  return StateVector(v);
}

}  // namespace brach::testing

#endif  // BRACH_TESTS_SUPPORT_HPP
