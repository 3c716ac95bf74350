// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "fock/space.hpp"
#include "fock/types.hpp"

/// Ranking and unranking of configurations.
///
/// Fermionic configurations are labeled by the positions of their holes,
/// counted from the left and 1-based. With M_v = M - N holes at
/// i_1 < ... < i_{M_v}:
///
///     J = 1 + sum_k C(N + M_v - i_k, M_v + 1 - k)
///
/// so that J = 1 has every particle packed to the left. Bosonic occupation
/// vectors are addressed through the isomorphic fermion space with N
/// particles and N + M - 1 orbitals, where n_k counts the particles between
/// consecutive holes.
namespace fock::combinadics {

Address fermion_rank(const HoleVector& holes, const SpaceDescriptor& space);
HoleVector fermion_unrank(Address j, const SpaceDescriptor& space);

Address boson_rank(const OccupationVector& occ, const SpaceDescriptor& space);
OccupationVector boson_unrank(Address j, const SpaceDescriptor& space);

/// Hole positions of the isomorphic fermion configuration (N particles,
/// N + M - 1 orbitals): i_1 = n_1 + 1, i_k = i_{k-1} + n_k + 1.
HoleVector boson_to_fermion(const OccupationVector& occ);

/// Inverse of boson_to_fermion; `particles` closes n_M = N + M - i_{M-1} - 1.
OccupationVector fermion_to_boson(const HoleVector& holes, int particles);

/// Throws InvalidConfiguration unless `holes` is a valid label in `space`.
void validate(const HoleVector& holes, const SpaceDescriptor& space);
/// Throws InvalidConfiguration unless `occ` is a valid configuration of `space`
/// (either statistics; fermionic spaces also require n_k in {0, 1}).
void validate(const OccupationVector& occ, const SpaceDescriptor& space);
/// Throws AddressError unless 1 <= j <= N_conf.
void validate(Address j, const SpaceDescriptor& space);

// Conversions between fermionic representations (M <= 64).
FermionBits bits_from_holes(const HoleVector& holes, int orbitals);
HoleVector holes_from_bits(FermionBits bits, int orbitals);
OccupationVector occupations_from_bits(FermionBits bits, int orbitals);
FermionBits bits_from_occupations(const OccupationVector& occ);

/// Address of an arbitrary configuration given as occupations, dispatching
/// on the space statistics.
Address rank(const OccupationVector& occ, const SpaceDescriptor& space);
OccupationVector unrank(Address j, const SpaceDescriptor& space);

// Unchecked fast paths used inside the kernels; they return J - 1.

/// Offset of a fermionic bit-set configuration.
inline Index rank_bits(FermionBits bits, const SpaceDescriptor& space) noexcept {
  const BinomialTable& c = space.binomials();
  const int m = space.orbitals();
  const int mv = space.hole_count();
  const FermionBits mask = m == 64 ? ~FermionBits{0} : ((FermionBits{1} << m) - 1);
  FermionBits holes = ~bits & mask;
  Index offset = 0;
  int k = 1;
  while (holes) {
    const int pos = __builtin_ctzll(holes) + 1;
    offset += c(m - pos, mv + 1 - k);
    ++k;
    holes &= holes - 1;
  }
  return offset;
}

/// Offset of a bosonic occupation vector.
inline Index rank_occupations(std::span<const int> occ, const SpaceDescriptor& space) noexcept {
  const BinomialTable& c = space.binomials();
  const int n = space.particles();
  const int m = space.orbitals();
  Index offset = 0;
  int prefix = 0;
  for (int k = 1; k < m; ++k) {
    prefix += occ[k - 1];
    offset += c(n + m - 1 - k - prefix, m - k);
  }
  return offset;
}

}  // namespace fock::combinadics
