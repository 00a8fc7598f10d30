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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "brach/audit.hpp"
#include "support.hpp"

using namespace brach;
using namespace brach::testing;

namespace {

std::vector<double> spectrum(const HermitianOperator& h) { return hermitian_eigensystem(h.mat()).eigenvalues; }

bool same_report(const AuditReport& a, const AuditReport& b) {
  if (a.climb_history.size() != b.climb_history.size()) return false;
  for (std::size_t k = 0; k < a.climb_history.size(); ++k) {
    const auto& x = a.climb_history[k];
    const auto& y = b.climb_history[k];
    if (x.arrived != y.arrived || x.time != y.time || x.max_fidelity != y.max_fidelity) return false;
  }
  return a.tau_star == b.tau_star && a.tau_reference == b.tau_reference &&
         a.best_competitor_time == b.best_competitor_time && a.n_beaten == b.n_beaten &&
         a.n_arrived == b.n_arrived && a.verdict == b.verdict && a.trials == b.trials && a.gaps == b.gaps;
}

}  // namespace

TEST_CASE("haar_unitary produces unitary matrices") {
  Rng rng = trial_stream(1, 0);
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto u = haar_unitary(n, rng);
    CHECK(frobenius_diff(u.adjoint() * u, ComplexMatrix::identity(n)) < 1e-13);
  }
}

TEST_CASE("random_constrained_hamiltonian examples") {
  Rng rng = trial_stream(7, 3);
  SUBCASE("dimension 2 pins both eigenvalues") {
    const auto ev = spectrum(random_constrained_hamiltonian(2, 2.0, rng));
    CHECK(std::abs(ev[0] + 1.0) <= 1e-12);
    CHECK(std::abs(ev[1] - 1.0) <= 1e-12);
  }
  SUBCASE("dimension 4 pins the extremes") {
    const auto ev = spectrum(random_constrained_hamiltonian(4, 2.0, rng));
    CHECK(std::abs(ev.front() + 1.0) <= 1e-12);
    CHECK(std::abs(ev.back() - 1.0) <= 1e-12);
  }
  SUBCASE("a fixed stream reproduces the matrix bit for bit") {
    Rng a = trial_stream(99, 12);
    Rng b = trial_stream(99, 12);
    const auto ha = random_constrained_hamiltonian(5, 1.3, a);
    const auto hb = random_constrained_hamiltonian(5, 1.3, b);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) CHECK(ha.mat()(r, c) == hb.mat()(r, c));
  }
  SUBCASE("distinct trial indices give distinct streams") {
    Rng a = trial_stream(99, 12);
    Rng b = trial_stream(99, 13);
    CHECK(a() != b());
  }
  CHECK_THROWS_AS(random_constrained_hamiltonian(1, 1.0, rng), DomainError);
  CHECK_THROWS_AS(random_constrained_hamiltonian(3, 0.0, rng), DomainError);
}

TEST_CASE("every competitor has the configured spread") {
  Rng rng = trial_stream(2024, 0);
  std::uniform_real_distribution<double> spreads(0.1, 5.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    const double spread = spreads(rng);
    const auto ev = spectrum(random_constrained_hamiltonian(n, spread, rng));
    CHECK(std::abs((ev.back() - ev.front()) - spread) <= 1e-12);
    for (double e : ev) {
      CHECK(e >= -spread / 2 - 1e-12);
      CHECK(e <= spread / 2 + 1e-12);
    }
  }
}

TEST_CASE("perturb_competitor rotates the eigenbasis and keeps the spectrum") {
  Rng rng = trial_stream(5, 5);
  const auto c = random_competitor(4, 2.0, rng);
  const auto p = perturb_competitor(c, 0.1, rng);
  CHECK(p.eigenvalues == c.eigenvalues);
  CHECK(frobenius_diff(p.basis.adjoint() * p.basis, ComplexMatrix::identity(4)) < 1e-13);
  const double moved = frobenius_diff(p.basis, c.basis);
  CHECK(moved > 0.0);
  CHECK(moved < 0.2);
  const auto ev = spectrum(p.hamiltonian());
  CHECK(std::abs(ev.back() - ev.front() - 2.0) <= 1e-12);
}

TEST_CASE("TrialOutcome ordering") {
  const TrialOutcome fast{true, 1.0, 1.0};
  const TrialOutcome slow{true, 2.0, 1.0};
  const TrialOutcome close{false, INFINITY, 0.99};
  const TrialOutcome far{false, INFINITY, 0.5};
  CHECK(fast.better_than(slow));
  CHECK(slow.better_than(close));
  CHECK(close.better_than(far));
  CHECK_FALSE(far.better_than(close));
  CHECK_FALSE(fast.better_than(fast));
}

TEST_CASE("run_audit confirms optimality for theta = pi/2 in dimension 2") {
  AuditConfig cfg;
  const auto report = run_audit(ket0(), ket_plus(), 1.0, SpreadConvention::eq8, cfg);
  CHECK(report.verdict == Verdict::optimal_confirmed);
  CHECK(report.n_beaten == 0);
  CHECK(report.trials == cfg.n_random + cfg.n_local_steps);
  CHECK(std::abs(report.tau_star - std::numbers::pi / (2 * std::numbers::sqrt2)) < 1e-15);
  CHECK(std::abs(report.spread - std::numbers::sqrt2) < 1e-15);
  CHECK(report.tau_reference < report.tau_star);
  CHECK(report.t_max == 4 * report.tau_star);
}

TEST_CASE("the optimal Hamiltonian raced as a competitor meets the reference time") {
  AuditConfig cfg;
  cfg.n_random = 0;
  cfg.n_local_steps = 0;
  Gen gen(601);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = random_dim(gen, 2, 5);
    const auto psi_i = random_state(n, gen);
    const auto psi_f = random_state(n, gen);
    const auto sol = optimal_hamiltonian(decompose_plane(psi_i, psi_f), 1.0);
    cfg.injected = {sol.hamiltonian};
    const auto report = run_audit(psi_i, psi_f, 1.0, SpreadConvention::eq8, cfg);
    REQUIRE(report.best_competitor_time.has_value());
    CHECK(std::abs(*report.best_competitor_time - report.tau_reference) <= 1e-6);
    CHECK(report.n_beaten == 0);
    CHECK(report.trials == 1);
    CHECK(report.verdict == Verdict::optimal_confirmed);
    const auto fp = first_passage(sol.hamiltonian, psi_i, psi_f, 4 * sol.tau, cfg.threshold);
    CHECK(std::abs(*fp.arrival_time - report.tau_star) <= 1e-6);
  }
}

TEST_CASE("an over-spread competitor is reported as a violation") {
  // Doubling ω doubles the spread, which the audit must catch as faster than allowed.
  AuditConfig cfg;
  cfg.n_random = 10;
  cfg.n_local_steps = 0;
  const auto fast = optimal_hamiltonian(decompose_plane(ket0(), ket_plus()), 2.0);
  cfg.injected = {fast.hamiltonian};
  const auto report = run_audit(ket0(), ket_plus(), 1.0, SpreadConvention::eq8, cfg);
  CHECK(report.verdict == Verdict::violation_found);
  CHECK(report.n_beaten == 1);
}

TEST_CASE("an empty audit is vacuously optimal") {
  AuditConfig cfg;
  cfg.n_random = 0;
  cfg.n_local_steps = 0;
  const auto report = run_audit(ket0(), ket_plus(), 1.0, SpreadConvention::eq8, cfg);
  CHECK(report.trials == 0);
  CHECK(report.verdict == Verdict::optimal_confirmed);
  CHECK_FALSE(report.best_competitor_time.has_value());
}

TEST_CASE("run_audit is deterministic and the hill climb is monotone") {
  Gen gen(602);
  const auto psi_i = random_state(3, gen);
  const auto psi_f = random_state(3, gen);
  AuditConfig cfg;
  cfg.n_random = 100;
  cfg.n_local_steps = 80;
  cfg.seed = 1234;
  const auto a = run_audit(psi_i, psi_f, 1.0, SpreadConvention::saturating, cfg);
  const auto b = run_audit(psi_i, psi_f, 1.0, SpreadConvention::saturating, cfg);
  CHECK(same_report(a, b));
  REQUIRE(a.climb_history.size() == 80);
  for (std::size_t k = 1; k < a.climb_history.size(); ++k) {
    CHECK_FALSE(a.climb_history[k - 1].better_than(a.climb_history[k]));
  }
  CHECK(a.verdict == Verdict::optimal_confirmed);
}

TEST_CASE("parallel and serial random races agree exactly") {
  Gen gen(603);
  const auto psi_i = random_state(3, gen);
  const auto psi_f = random_state(3, gen);
  AuditConfig cfg;
  cfg.n_random = 64;
  const auto par = race_random_competitors(psi_i, psi_f, 3, cfg, 1.0, 10.0, 1.0);
  const auto ser = race_random_competitors_serial(psi_i, psi_f, 3, cfg, 1.0, 10.0, 1.0);
  REQUIRE(par.size() == ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) {
    CHECK(par[k].arrived == ser[k].arrived);
    CHECK(par[k].time == ser[k].time);
    CHECK(par[k].max_fidelity == ser[k].max_fidelity);
  }
}

TEST_CASE("run_audit argument checks") {
  AuditConfig cfg;
  CHECK_THROWS_AS(run_audit(ket0(), ket0(), 1.0, SpreadConvention::eq8, cfg), DegeneratePairError);
  cfg.t_max_factor = 1.0;
  CHECK_THROWS_AS(run_audit(ket0(), ket1(), 1.0, SpreadConvention::eq8, cfg), DomainError);
  cfg = AuditConfig{};
  cfg.injected = {HermitianOperator(ComplexMatrix(3))};
  CHECK_THROWS_AS(run_audit(ket0(), ket1(), 1.0, SpreadConvention::eq8, cfg), DimensionError);
}
