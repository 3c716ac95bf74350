// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "fock/executor.hpp"
#include "fock/hamiltonian.hpp"
#include "fock/kernel.hpp"
#include "fock/mixtures.hpp"
#include "fock/observables.hpp"

namespace fock::executor {

/// H psi with terms spread over `workers` threads; bitwise equal to
/// kernel::apply_hamiltonian for every worker count.
StateVector parallel_apply(const HamiltonianSpec& spec, const StateVector& psi,
                           std::size_t workers, const kernel::ApplyOptions& options = {});
mixtures::MixtureStateVector parallel_apply(const mixtures::MixtureHamiltonian& h,
                                            const mixtures::MixtureStateVector& psi,
                                            std::size_t workers,
                                            const kernel::ApplyOptions& options = {});

struct DensityReport {
  observables::OneBodyDensity one_body;
  observables::TwoBodyDensity two_body;
  cplx energy;
};

/// Every density element is computed by the worker owning its index tuple;
/// the energy is dot(psi, parallel_apply(spec, psi)).
DensityReport parallel_densities(const HamiltonianSpec& spec, const StateVector& psi,
                                 std::size_t workers);

/// Assignment of density elements: (k, q) tuples then (k, s, l, q) tuples,
/// dealt round-robin. Returned as element ids per worker.
std::vector<std::vector<std::size_t>> density_assignment(int orbitals, std::size_t workers);

}  // namespace fock::executor
