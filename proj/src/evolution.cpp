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

#include "brach/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <omp.h>

namespace brach {

StateVector propagate(const HermitianOperator& h, const StateVector& psi0, double t, double hbar) {
  if (h.dim() != psi0.dim()) throw DimensionError("propagate: dimension mismatch");
  if (t < 0.0) throw DomainError("propagate: t must be non-negative");
  if (!(hbar > 0.0)) throw DomainError("propagate: hbar must be positive");
  return StateVector::normalized(matrix_exponential_action(h.mat(), t / hbar, psi0.vec()));
}

// ---------------------------------------------------------------------------
// SpectralPropagator

SpectralPropagator::SpectralPropagator(const HermitianOperator& h, const StateVector& psi0, double hbar)
    : es_(hermitian_eigensystem(h.mat())), hbar_(hbar) {
  if (h.dim() != psi0.dim()) throw DimensionError("SpectralPropagator: dimension mismatch");
  if (!(hbar > 0.0)) throw DomainError("SpectralPropagator: hbar must be positive");
  coeffs_.reserve(es_.eigenvectors.size());
  for (const auto& v : es_.eigenvectors) coeffs_.push_back(inner_product(v, psi0.vec()));
}

StateVector SpectralPropagator::state(double t) const {
  ComplexVector out(dim());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Complex a = std::polar(1.0, es_.eigenvalues[k] * t / hbar_) * coeffs_[k];
    const auto& vk = es_.eigenvectors[k];
    for (std::size_t r = 0; r < out.dim(); ++r) out[r] += a * vk[r];
  }
  return StateVector::normalized(std::move(out));
}

SpectralPropagator::Target SpectralPropagator::target(const StateVector& target) const {
  if (target.dim() != dim()) throw DimensionError("SpectralPropagator::target: dimension mismatch");
  Target out;
  out.frequencies_.reserve(dim());
  out.weights_.reserve(dim());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out.frequencies_.push_back(es_.eigenvalues[k] / hbar_);
    out.weights_.push_back(inner_product(target.vec(), es_.eigenvectors[k]) * coeffs_[k]);
  }
  return out;
}

double SpectralPropagator::Target::fidelity(double t) const {
  Complex amp = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) amp += weights_[k] * std::polar(1.0, frequencies_[k] * t);
  return std::norm(amp);
}

double SpectralPropagator::Target::fidelity_rate(double t) const {
  Complex amp = 0.0;
  Complex rate = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    const Complex term = weights_[k] * std::polar(1.0, frequencies_[k] * t);
    amp += term;
    rate += Complex(0.0, frequencies_[k]) * term;
  }
  return 2.0 * (std::conj(amp) * rate).real();
}

// ---------------------------------------------------------------------------
// Trajectory sampling

namespace {

void check_sampling_args(const HermitianOperator& h, const StateVector& psi0, const StateVector& target,
                         double t_max, std::size_t n_samples) {
  if (h.dim() != psi0.dim() || target.dim() != psi0.dim()) {
    throw DimensionError("sample_trajectory: dimension mismatch");
  }
  if (n_samples < 2) throw DomainError("sample_trajectory: need at least two samples");
  if (!(t_max > 0.0)) throw DomainError("sample_trajectory: t_max must be positive");
}

TrajectorySample make_sample(const HermitianOperator& h, const SpectralPropagator& prop,
                             const StateVector& target, double t, double step) {
  StateVector state = prop.state(t);
  const double speed = fs_distance(prop.state(t - step), prop.state(t + step)) / (2.0 * step);
  const double fid = fidelity(target, state);
  const double dh = energy_uncertainty(h, state);
  return TrajectorySample{t, std::move(state), fid, dh, speed};
}

double sample_time(std::size_t k, std::size_t n_samples, double t_max) {
  return k + 1 == n_samples ? t_max : t_max * static_cast<double>(k) / static_cast<double>(n_samples - 1);
}

}  // namespace

std::vector<TrajectorySample> sample_trajectory(const HermitianOperator& h, const StateVector& psi0,
                                                const StateVector& target, double t_max,
                                                std::size_t n_samples, double hbar) {
  check_sampling_args(h, psi0, target, t_max, n_samples);
  const SpectralPropagator prop(h, psi0, hbar);
  const double step = t_max / static_cast<double>(n_samples - 1);

  std::vector<std::optional<TrajectorySample>> slots(n_samples);
  const auto n = static_cast<std::ptrdiff_t>(n_samples);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    slots[idx] = make_sample(h, prop, target, sample_time(idx, n_samples, t_max), step);
  }

  std::vector<TrajectorySample> out;
  out.reserve(n_samples);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<TrajectorySample> sample_trajectory_serial(const HermitianOperator& h,
                                                       const StateVector& psi0,
                                                       const StateVector& target, double t_max,
                                                       std::size_t n_samples, double hbar) {
  check_sampling_args(h, psi0, target, t_max, n_samples);
  const SpectralPropagator prop(h, psi0, hbar);
  const double step = t_max / static_cast<double>(n_samples - 1);

  std::vector<TrajectorySample> out;
  out.reserve(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) {
    out.push_back(make_sample(h, prop, target, sample_time(k, n_samples, t_max), step));
  }
  return out;
}

// ---------------------------------------------------------------------------
// First passage

FirstPassageResult first_passage(const SpectralPropagator::Target& fid, double t_max, double threshold,
                                 std::size_t grid_points) {
  if (!(threshold > 0.0) || threshold > 1.0) throw DomainError("first_passage: threshold must lie in (0, 1]");
  if (!(t_max > 0.0)) throw DomainError("first_passage: t_max must be positive");
  if (grid_points < 2) throw DomainError("first_passage: grid needs at least two points");

  const double tol = PassageConfig::relative_time_tolerance * t_max;
  const double dt = t_max / static_cast<double>(grid_points - 1);
  auto grid_time = [&](std::size_t k) { return k + 1 == grid_points ? t_max : dt * static_cast<double>(k); };

  // lo below threshold, hi at or above it.
  auto bisect_crossing = [&](double lo, double hi) {
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (fid.fidelity(mid) >= threshold) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return hi;
  };
  // Fidelity rising at lo, not rising at hi.
  auto bisect_peak = [&](double lo, double hi) {
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (fid.fidelity_rate(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  FirstPassageResult result;
  auto record = [&](double crossing, double arrival) {
    result.found = true;
    result.time = crossing;
    result.fidelity_at_time = fid.fidelity(crossing);
    result.arrival_time = arrival;
    result.arrival_fidelity = fid.fidelity(arrival);
    result.max_fidelity = std::max({result.max_fidelity, result.fidelity_at_time, result.arrival_fidelity});
  };
  // First peak at or after grid index `from`; t_max when fidelity is still rising there.
  auto next_peak = [&](std::size_t from) {
    double rate = fid.fidelity_rate(grid_time(from));
    if (rate <= 0.0) return grid_time(from);
    for (std::size_t m = from; m + 1 < grid_points; ++m) {
      const double next_rate = fid.fidelity_rate(grid_time(m + 1));
      if (rate > 0.0 && next_rate <= 0.0) return bisect_peak(grid_time(m), grid_time(m + 1));
      rate = next_rate;
    }
    return t_max;
  };

  const double f_start = fid.fidelity(0.0);
  result.max_fidelity = f_start;
  if (f_start >= threshold) {
    record(0.0, next_peak(0));
    return result;
  }
  double rate = fid.fidelity_rate(0.0);

  for (std::size_t k = 0; k + 1 < grid_points; ++k) {
    const double t_lo = grid_time(k);
    const double t_hi = grid_time(k + 1);
    const double f_next = fid.fidelity(t_hi);
    const double rate_next = fid.fidelity_rate(t_hi);
    result.max_fidelity = std::max(result.max_fidelity, f_next);

    if (rate > 0.0 && rate_next <= 0.0) {
      const double t_peak = bisect_peak(t_lo, t_hi);
      const double f_peak = fid.fidelity(t_peak);
      result.max_fidelity = std::max(result.max_fidelity, f_peak);
      if (f_peak >= threshold) {
        record(bisect_crossing(t_lo, t_peak), t_peak);
        return result;
      }
    } else if (f_next >= threshold) {
      record(bisect_crossing(t_lo, t_hi), next_peak(k + 1));
      return result;
    }
    rate = rate_next;
  }
  return result;
}

FirstPassageResult first_passage(const HermitianOperator& h, const StateVector& psi0,
                                 const StateVector& target, double t_max, double threshold, double hbar) {
  if (h.dim() != psi0.dim() || target.dim() != psi0.dim()) {
    throw DimensionError("first_passage: dimension mismatch");
  }
  const SpectralPropagator prop(h, psi0, hbar);
  return first_passage(prop.target(target), t_max, threshold);
}

// ---------------------------------------------------------------------------

ComplexVector integrate_rk4(const std::function<ComplexMatrix(double)>& h_of_t, const ComplexVector& psi0,
                            double t_end, std::size_t steps, double hbar) {
  if (steps == 0) throw DomainError("integrate_rk4: need at least one step");
  const double dt = t_end / static_cast<double>(steps);
  const Complex factor(0.0, 1.0 / hbar);
  auto deriv = [&](double t, const ComplexVector& psi) { return factor * (h_of_t(t) * psi); };

  ComplexVector psi = psi0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = dt * static_cast<double>(k);
    const ComplexVector k1 = deriv(t, psi);
    const ComplexVector k2 = deriv(t + 0.5 * dt, psi + Complex(0.5 * dt) * k1);
    const ComplexVector k3 = deriv(t + 0.5 * dt, psi + Complex(0.5 * dt) * k2);
    const ComplexVector k4 = deriv(t + dt, psi + Complex(dt) * k3);
    psi += Complex(dt / 6.0) * (k1 + Complex(2.0) * k2 + Complex(2.0) * k3 + k4);
  }
  return psi;
}

}  // namespace brach
