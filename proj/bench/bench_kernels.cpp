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

// Serial versus OpenMP timings for the two parallel kernels.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include <omp.h>

#include "brach/audit.hpp"

using namespace brach;

namespace {

StateVector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = Complex(g(rng), g(rng));
  return StateVector::normalized(v);
}

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-34s serial %9.4fs  openmp %9.4fs  speedup %5.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  std::mt19937_64 rng(7);

  for (std::size_t dim : {2, 4, 8}) {
    const auto psi_i = random_state(dim, rng);
    const auto psi_f = random_state(dim, rng);
    const auto d = decompose_plane(psi_i, psi_f);
    const auto sol = optimal_hamiltonian(d, 1.0);
    AuditConfig cfg;
    const double spread = sol.lambda_plus - sol.lambda_minus;
    const double t_max = cfg.t_max_factor * sol.tau;

    char label[64];
    std::snprintf(label, sizeof(label), "race %zu competitors, dim %zu", cfg.n_random, dim);
    const double rs = best_of(reps, [&] {
      race_random_competitors_serial(psi_i, psi_f, dim, cfg, spread, t_max, 1.0);
    });
    const double rp = best_of(reps, [&] { race_random_competitors(psi_i, psi_f, dim, cfg, spread, t_max, 1.0); });
    report(label, rs, rp);

    std::snprintf(label, sizeof(label), "trajectory 4096 samples, dim %zu", dim);
    const double ts = best_of(reps, [&] { sample_trajectory_serial(sol.hamiltonian, psi_i, psi_f, sol.tau, 4096, 1.0); });
    const double tp = best_of(reps, [&] { sample_trajectory(sol.hamiltonian, psi_i, psi_f, sol.tau, 4096, 1.0); });
    report(label, ts, tp);
  }
  return 0;
}
