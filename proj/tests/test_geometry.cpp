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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "brach/geometry.hpp"
#include "support.hpp"

using namespace brach;
using namespace brach::testing;

namespace {
constexpr Complex I{0.0, 1.0};
constexpr double pi = std::numbers::pi;
}

TEST_CASE("StateVector requires unit norm") {
  CHECK_THROWS_AS(StateVector(ComplexVector{1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(StateVector::normalized(ComplexVector(3)), DomainError);
  CHECK(std::abs(StateVector::normalized(ComplexVector{3.0, 4.0 * I})[1] - 0.8 * I) < 1e-15);
}

TEST_CASE("fs_distance examples") {
  CHECK(fs_distance(ket0(), ket0()) == 0.0);
  CHECK(std::abs(fs_distance(ket0(), ket1()) - pi) < 1e-15);
  // 2·arccos(1/√2) = π/2.
  CHECK(std::abs(fs_distance(ket0(), ket_plus()) - pi / 2) < 1e-15);
  CHECK_THROWS_AS(fs_distance(ket0(2), ket0(3)), DimensionError);
}

TEST_CASE("fs_distance is a metric on rays") {
  Gen gen(301);
  std::uniform_real_distribution<double> phase(0.0, 2 * pi);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = random_dim(gen, 2, 6);
    const auto a = random_state(n, gen);
    const auto b = random_state(n, gen);
    const auto c = random_state(n, gen);
    const double ab = fs_distance(a, b);
    CHECK(ab >= 0.0);
    CHECK(ab <= pi);
    CHECK(std::abs(ab - fs_distance(b, a)) < 1e-15);
    CHECK(fs_distance(a, c) <= ab + fs_distance(b, c) + 1e-9);
    const StateVector a_rot(std::polar(1.0, phase(gen)) * a.vec());
    const StateVector b_rot(std::polar(1.0, phase(gen)) * b.vec());
    CHECK(std::abs(fs_distance(a_rot, b_rot) - ab) < 1e-12);
  }
}

TEST_CASE("decompose_plane on |0>, (|0>+|1>)/sqrt2") {
  const auto d = decompose_plane(ket0(), ket_plus());
  CHECK(std::abs(d.theta - pi / 2) < 1e-15);
  CHECK(std::abs(d.phi - 1.5 * pi) < 1e-15);
  // Gram–Schmidt by hand: ψ_F − ⟨0|ψ_F⟩|0⟩ = |1⟩/√2, normalised to |1⟩.
  CHECK(max_abs_diff(d.psi_bar.vec(), ComplexVector{0.0, 1.0}) < 1e-15);
  CHECK(max_abs_diff(d.psi_f_aligned.vec(), ket_plus().vec()) < 1e-15);
}

TEST_CASE("decompose_plane rejects states on the same ray") {
  const StateVector f(std::polar(1.0, pi / 3) * ket0().vec());
  CHECK_THROWS_AS(decompose_plane(ket0(), f), DegeneratePairError);
  CHECK_THROWS_AS(decompose_plane(ket0(2), ket0(3)), DimensionError);
}

TEST_CASE("decompose_plane on an orthogonal pair strips the phase from the largest component") {
  const StateVector f(ComplexVector{0.0, I});
  const auto d = decompose_plane(ket0(), f);
  CHECK(std::abs(d.theta - pi) < 1e-15);
  CHECK(max_abs_diff(d.psi_f_aligned.vec(), ComplexVector{0.0, 1.0}) < 1e-15);
  CHECK(max_abs_diff(d.psi_bar.vec(), ComplexVector{0.0, 1.0}) < 1e-15);
}

TEST_CASE("decompose_plane invariants on random pairs") {
  Gen gen(302);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = random_dim(gen);
    const auto psi_i = random_state(n, gen);
    const auto psi_f = random_state(n, gen);
    const auto d = decompose_plane(psi_i, psi_f);

    CHECK(d.theta > 0.0);
    CHECK(d.theta <= pi);
    CHECK(std::abs(d.theta - fs_distance(psi_i, psi_f)) < 1e-10);
    CHECK(std::abs(inner_product(d.psi_i, d.psi_bar)) <= 1e-12);

    const Complex overlap = inner_product(d.psi_i, d.psi_f_aligned);
    CHECK(std::abs(overlap.imag()) <= 1e-12);
    CHECK(overlap.real() >= 0.0);
    CHECK(std::abs(overlap.real() - std::cos(d.theta / 2)) <= 1e-12);

    // Aligned ψ_F lies on the same ray as ψ_F.
    CHECK(std::abs(std::abs(inner_product(psi_f, d.psi_f_aligned)) - 1.0) < 1e-12);

    // Reassembly: cos(θ/2)·ψ_I + e^{i(φ+π/2)}·sin(θ/2)·ψ̄_I.
    const Complex phase = std::polar(1.0, d.phi + pi / 2);
    const ComplexVector rebuilt =
        Complex(std::cos(d.theta / 2)) * d.psi_i.vec() + (phase * std::sin(d.theta / 2)) * d.psi_bar.vec();
    CHECK(max_abs_diff(rebuilt, d.psi_f_aligned.vec()) <= 1e-12);
  }
}

TEST_CASE("decompose_plane is invariant under global phases of the inputs") {
  Gen gen(303);
  std::uniform_real_distribution<double> phase(0.0, 2 * pi);
  const auto psi_i = random_state(4, gen);
  const auto psi_f = random_state(4, gen);
  const auto base = decompose_plane(psi_i, psi_f);
  const auto base_bar = ComplexMatrix::outer(base.psi_bar.vec(), base.psi_bar.vec());
  for (int trial = 0; trial < 50; ++trial) {
    const StateVector i_rot(std::polar(1.0, phase(gen)) * psi_i.vec());
    const StateVector f_rot(std::polar(1.0, phase(gen)) * psi_f.vec());
    const auto d = decompose_plane(i_rot, f_rot);
    CHECK(std::abs(d.theta - base.theta) <= 1e-10);
    CHECK(frobenius_diff(ComplexMatrix::outer(d.psi_bar.vec(), d.psi_bar.vec()), base_bar) <= 1e-10);
  }
}

TEST_CASE("decompose_plane stays accurate for nearby states") {
  // ψ_F = cos(δ)|0⟩ + sin(δ)|1⟩ is at angle θ = 2δ.
  for (double delta : {1e-3, 1e-5, 1e-7}) {
    const StateVector f(ComplexVector{std::cos(delta), std::sin(delta), 0.0});
    const auto d = decompose_plane(ket0(3), f);
    CHECK(std::abs(d.theta - 2 * delta) <= 1e-15);
    CHECK(max_abs_diff(d.psi_bar.vec(), ComplexVector{0.0, 1.0, 0.0}) <= 1e-12);
  }
}

TEST_CASE("plane projector is idempotent and fixes both states") {
  Gen gen(304);
  const auto d = decompose_plane(random_state(5, gen), random_state(5, gen));
  const auto p = d.plane_projector();
  CHECK(frobenius_diff(p * p, p) < 1e-12);
  CHECK(max_abs_diff(p * d.psi_f_aligned.vec(), d.psi_f_aligned.vec()) < 1e-12);
  CHECK(max_abs_diff(p * d.psi_i.vec(), d.psi_i.vec()) < 1e-12);
}
