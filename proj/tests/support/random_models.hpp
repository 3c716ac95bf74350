// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fock/hamiltonian.hpp"
#include "fock/mixtures.hpp"

namespace fock::testing {

/// Random h and W satisfying h = h† and W_ksql = conj(W_qlks).
HamiltonianSpec random_hermitian_spec(const SpaceDescriptor& space, std::uint64_t seed);

/// Random Hermitian intra-species parts and inter-species couplings.
mixtures::MixtureHamiltonian random_hermitian_mixture(const mixtures::MixtureSpace& space,
                                                      std::uint64_t seed);

/// Every occupation vector of (statistics, N, M), generated by recursive
/// distribution of particles with the first orbital filled first. This is
/// descending lexicographic order, i.e. ascending address.
std::vector<std::vector<int>> brute_force_configurations(Statistics statistics, int particles,
                                                         int orbitals);

std::vector<cplx> random_vector(std::size_t n, std::uint64_t seed);

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
double diff_norm(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace fock::testing
