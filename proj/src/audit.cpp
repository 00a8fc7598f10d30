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

#include "brach/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <omp.h>

namespace brach {

Rng trial_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

ComplexMatrix haar_unitary(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  std::vector<ComplexVector> cols;
  cols.reserve(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    ComplexVector v(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      v[r] = Complex(re, im);
    }
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : cols) v -= inner_product(q, v) * q;
    v *= 1.0 / v.norm();
    cols.push_back(std::move(v));
  }
  ComplexMatrix u(dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = cols[c][r];
  return u;
}

HermitianOperator Competitor::hamiltonian() const {
  const std::size_t n = basis.dim();
  ComplexMatrix h(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) h(r, c) += eigenvalues[k] * basis(r, k) * std::conj(basis(c, k));
  return HermitianOperator(0.5 * (h + h.adjoint()));
}

Competitor random_competitor(std::size_t dim, double spread, Rng& rng) {
  if (dim < 2) throw DomainError("random_competitor: dimension must be at least 2");
  if (!(spread > 0.0)) throw DomainError("random_competitor: spread must be positive");
  Competitor c{haar_unitary(dim, rng), std::vector<double>(dim)};
  std::uniform_real_distribution<double> interior(-0.5 * spread, 0.5 * spread);
  c.eigenvalues.front() = -0.5 * spread;
  c.eigenvalues.back() = 0.5 * spread;
  for (std::size_t k = 1; k + 1 < dim; ++k) c.eigenvalues[k] = interior(rng);
  return c;
}

HermitianOperator random_constrained_hamiltonian(std::size_t dim, double spread, Rng& rng) {
  return random_competitor(dim, spread, rng).hamiltonian();
}

Competitor perturb_competitor(const Competitor& c, double scale, Rng& rng) {
  const std::size_t n = c.basis.dim();
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, col) = Complex(re, im);
    }
  g = 0.5 * (g + g.adjoint());
  g *= 1.0 / g.frobenius_norm();
  return Competitor{matrix_exponential(g, scale) * c.basis, c.eigenvalues};
}

void AuditConfig::validate() const {
  if (!(t_max_factor > 1.0)) throw DomainError("audit: t_max_factor must exceed 1");
  if (!(threshold > 0.0) || threshold > 1.0) throw DomainError("audit: threshold must lie in (0, 1]");
  if (spread < 0.0 || !std::isfinite(spread)) throw DomainError("audit: spread must be positive");
  if (!(relative_tolerance >= 0.0)) throw DomainError("audit: tolerance must be non-negative");
  if (!(initial_step > 0.0)) throw DomainError("audit: initial step must be positive");
  if (rejections_per_halving == 0) throw DomainError("audit: rejections_per_halving must be positive");
}

std::string_view to_string(Verdict v) {
  return v == Verdict::optimal_confirmed ? "OPTIMAL_CONFIRMED" : "VIOLATION_FOUND";
}

bool TrialOutcome::better_than(const TrialOutcome& other) const {
  if (arrived != other.arrived) return arrived;
  if (arrived) return time < other.time;
  return max_fidelity > other.max_fidelity;
}

TrialOutcome race(const HermitianOperator& h, const StateVector& psi_i, const StateVector& target,
                  double t_max, double threshold, double hbar) {
  const FirstPassageResult fp = first_passage(h, psi_i, target, t_max, threshold, hbar);
  return TrialOutcome{fp.found, fp.found ? *fp.time : std::numeric_limits<double>::infinity(),
                      fp.max_fidelity};
}

namespace {

TrialOutcome random_trial(const StateVector& psi_i, const StateVector& target, std::size_t dim,
                          const AuditConfig& cfg, double spread, double t_max, double hbar,
                          std::size_t index) {
  Rng rng = trial_stream(cfg.seed, index);
  return race(random_constrained_hamiltonian(dim, spread, rng), psi_i, target, t_max, cfg.threshold, hbar);
}

// Stream index reserved for the hill climb.
constexpr std::uint64_t kClimbStream = std::numeric_limits<std::uint64_t>::max();

}  // namespace

std::vector<TrialOutcome> race_random_competitors(const StateVector& psi_i, const StateVector& target,
                                                  std::size_t dim, const AuditConfig& cfg, double spread,
                                                  double t_max, double hbar) {
  std::vector<TrialOutcome> out(cfg.n_random);
  const auto n = static_cast<std::ptrdiff_t>(cfg.n_random);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out[idx] = random_trial(psi_i, target, dim, cfg, spread, t_max, hbar, idx);
  }
  return out;
}

std::vector<TrialOutcome> race_random_competitors_serial(const StateVector& psi_i,
                                                         const StateVector& target, std::size_t dim,
                                                         const AuditConfig& cfg, double spread,
                                                         double t_max, double hbar) {
  std::vector<TrialOutcome> out;
  out.reserve(cfg.n_random);
  for (std::size_t k = 0; k < cfg.n_random; ++k) {
    out.push_back(random_trial(psi_i, target, dim, cfg, spread, t_max, hbar, k));
  }
  return out;
}

AuditReport run_audit(const StateVector& psi_i, const StateVector& psi_f, double omega,
                      SpreadConvention convention, const AuditConfig& cfg, double hbar) {
  cfg.validate();
  const PlaneDecomposition d = decompose_plane(psi_i, psi_f);
  const BrachistochroneSolution sol = optimal_hamiltonian(d, omega, convention, hbar);
  const std::size_t dim = psi_i.dim();

  AuditReport report;
  report.tau_star = sol.tau;
  report.spread = cfg.spread > 0.0 ? cfg.spread : sol.lambda_plus - sol.lambda_minus;
  report.t_max = cfg.t_max_factor * sol.tau;
  // Fubini–Study radius of the set {fidelity ≥ threshold} around the target; the speed
  // 2ΔH/ħ is at most spread/ħ.
  const double capture_radius = 2.0 * std::acos(std::sqrt(cfg.threshold));
  report.tau_reference = std::max(0.0, hbar * (d.theta - capture_radius) / report.spread);
  const double cutoff = report.tau_reference - cfg.relative_tolerance * report.tau_star;

  auto tally = [&](const TrialOutcome& o) {
    ++report.trials;
    if (!o.arrived) return;
    ++report.n_arrived;
    report.gaps.push_back((o.time - report.tau_reference) / report.tau_star);
    if (!report.best_competitor_time || o.time < *report.best_competitor_time) report.best_competitor_time = o.time;
    if (o.time < cutoff) ++report.n_beaten;
  };

  const std::vector<TrialOutcome> random =
      race_random_competitors(psi_i, psi_f, dim, cfg, report.spread, report.t_max, hbar);
  for (const auto& o : random) tally(o);
  for (const auto& h : cfg.injected) {
    if (h.dim() != dim) throw DimensionError("audit: injected competitor has wrong dimension");
    tally(race(h, psi_i, psi_f, report.t_max, cfg.threshold, hbar));
  }

  if (cfg.n_local_steps > 0) {
    Rng rng = trial_stream(cfg.seed, kClimbStream);
    Competitor current;
    TrialOutcome best;
    if (random.empty()) {
      current = random_competitor(dim, report.spread, rng);
      best = race(current.hamiltonian(), psi_i, psi_f, report.t_max, cfg.threshold, hbar);
    } else {
      std::size_t best_idx = 0;
      for (std::size_t k = 1; k < random.size(); ++k)
        if (random[k].better_than(random[best_idx])) best_idx = k;
      // Regenerate the winning competitor from its own stream.
      Rng replay = trial_stream(cfg.seed, best_idx);
      current = random_competitor(dim, report.spread, replay);
      best = random[best_idx];
    }

    double step = cfg.initial_step;
    std::size_t rejections = 0;
    for (std::size_t k = 0; k < cfg.n_local_steps; ++k) {
      Competitor proposal = perturb_competitor(current, step, rng);
      const TrialOutcome outcome = race(proposal.hamiltonian(), psi_i, psi_f, report.t_max, cfg.threshold, hbar);
      tally(outcome);
      if (outcome.better_than(best)) {
        current = std::move(proposal);
        best = outcome;
      } else if (++rejections % cfg.rejections_per_halving == 0) {
        step *= 0.5;
      }
      report.climb_history.push_back(best);
    }
  }

  report.verdict = report.n_beaten > 0 ? Verdict::violation_found : Verdict::optimal_confirmed;
  return report;
}

}  // namespace brach
