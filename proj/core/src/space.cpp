// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/space.hpp"

#include <string>

#include "fock/error.hpp"

namespace fock {

namespace {

void check_space(Statistics statistics, int n, int m) {
  if (n < 0) throw InvalidSpace("particle number must be non-negative");
  if (m < 1) throw InvalidSpace("orbital number must be at least 1");
  if (statistics == Statistics::Fermion) {
    if (m < n) {
      throw InvalidSpace("fermionic space needs M >= N (got N=" + std::to_string(n) +
                         ", M=" + std::to_string(m) + ")");
    }
    if (m > kMaxFermionOrbitals) {
      throw InvalidSpace("fermionic spaces are limited to " +
                         std::to_string(kMaxFermionOrbitals) + " orbitals");
    }
  }
}

}  // namespace

Index space_dimension(Statistics statistics, int particles, int orbitals) {
  check_space(statistics, particles, orbitals);
  if (statistics == Statistics::Fermion) return binomial(orbitals, particles);
  return binomial(particles + orbitals - 1, particles);
}

SpaceDescriptor::SpaceDescriptor(Statistics statistics, int particles, int orbitals)
    : statistics_(statistics), particles_(particles), orbitals_(orbitals) {
  dimension_ = space_dimension(statistics, particles, orbitals);
  hole_count_ = statistics == Statistics::Fermion ? orbitals - particles : orbitals - 1;
  // Addressing reads C(a, b) with a < N + M_v and b <= M_v; every entry it
  // touches for a valid configuration is bounded by N_conf, so saturation
  // elsewhere in the table is harmless.
  binomials_ = std::make_shared<const BinomialTable>(particles + hole_count_, hole_count_ + 1);
}

void require_same_space(const SpaceDescriptor& a, const SpaceDescriptor& b, const char* what) {
  if (!(a == b)) {
    throw SpaceMismatch(std::string(what) + ": operands belong to different spaces");
  }
}

}  // namespace fock
