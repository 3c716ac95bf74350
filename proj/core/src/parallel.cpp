// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/parallel.hpp"

#include "fock/error.hpp"

namespace fock::executor {

StateVector parallel_apply(const HamiltonianSpec& spec, const StateVector& psi,
                           std::size_t workers, const kernel::ApplyOptions& options) {
  require_same_space(spec.space, psi.space(), "parallel_apply");
  const auto terms = kernel::hamiltonian_terms(spec, options);
  return StateVector(psi.space(), kernel::apply_terms(psi.space(), terms, psi.amplitudes(), workers));
}

mixtures::MixtureStateVector parallel_apply(const mixtures::MixtureHamiltonian& h,
                                            const mixtures::MixtureStateVector& psi,
                                            std::size_t workers,
                                            const kernel::ApplyOptions& options) {
  if (!(h.space == psi.space())) throw SpaceMismatch("parallel_apply: mixture spaces differ");
  const auto terms = mixtures::mixture_terms(h, options);
  std::vector<double> weights(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) weights[t] = mixtures::term_weight(h.space, terms[t]);
  const auto partition = make_partition(weights, workers);
  return mixtures::MixtureStateVector(
      h.space, grouped_apply(partition, psi.amplitudes(), h.space.dimension(),
                             [&](std::size_t t, std::span<const cplx> x, std::span<cplx> y) {
                               mixtures::accumulate_term(h.space, terms[t], x, y);
                             }));
}

std::vector<std::vector<std::size_t>> density_assignment(int orbitals, std::size_t workers) {
  workers = std::max<std::size_t>(1, workers);
  const std::size_t m = orbitals;
  const std::size_t total = m * m + m * m * m * m;
  std::vector<std::vector<std::size_t>> out(workers);
  for (std::size_t e = 0; e < total; ++e) out[e % workers].push_back(e);
  return out;
}

DensityReport parallel_densities(const HamiltonianSpec& spec, const StateVector& psi,
                                 std::size_t workers) {
  require_same_space(spec.space, psi.space(), "parallel_densities");
  const int m = spec.space.orbitals();
  const std::size_t mm = static_cast<std::size_t>(m) * m;
  DensityReport report{observables::OneBodyDensity(m), observables::TwoBodyDensity(m), {}};
  const auto assignment = density_assignment(m, workers);
  parallel_for(assignment.size(), assignment.size(), [&](std::size_t w) {
    for (std::size_t e : assignment[w]) {
      if (e < mm) {
        const int k = static_cast<int>(e / m) + 1;
        const int q = static_cast<int>(e % m) + 1;
        report.one_body(k, q) = observables::one_body_element(psi, k, q);
      } else {
        std::size_t r = e - mm;
        const int q = static_cast<int>(r % m) + 1;
        r /= m;
        const int l = static_cast<int>(r % m) + 1;
        r /= m;
        const int s = static_cast<int>(r % m) + 1;
        const int k = static_cast<int>(r / m) + 1;
        report.two_body(k, s, l, q) = observables::two_body_element(psi, k, s, l, q);
      }
    }
  });
  report.energy = dot(psi, parallel_apply(spec, psi, workers));
  return report;
}

}  // namespace fock::executor
