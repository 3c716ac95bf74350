// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>

#include "fock/binomial.hpp"
#include "fock/types.hpp"

namespace fock {

/// Complete Fock subspace of N identical particles over M orbitals.
///
/// Holds the cached dimension N_conf and the binomial table used by the
/// addressing routines. Cheap to copy: the table is shared.
class SpaceDescriptor {
 public:
  /// Throws InvalidSpace for N < 0, M < 1, fermions with M < N or M > 64,
  /// and OverflowError when N_conf does not fit 64 bits.
  SpaceDescriptor(Statistics statistics, int particles, int orbitals);

  static SpaceDescriptor fermions(int n, int m) { return {Statistics::Fermion, n, m}; }
  static SpaceDescriptor bosons(int n, int m) { return {Statistics::Boson, n, m}; }

  Statistics statistics() const noexcept { return statistics_; }
  bool is_fermionic() const noexcept { return statistics_ == Statistics::Fermion; }
  int particles() const noexcept { return particles_; }
  int orbitals() const noexcept { return orbitals_; }

  /// Hole count of the fermionic labeling: M - N for fermions, M - 1 for
  /// bosons (holes of the isomorphic N-fermion, (N+M-1)-orbital space).
  int hole_count() const noexcept { return hole_count_; }

  /// Orbital count of the fermionic labeling (M, or N+M-1 for bosons).
  int labeling_orbitals() const noexcept { return particles_ + hole_count_; }

  Index dimension() const noexcept { return dimension_; }
  const BinomialTable& binomials() const noexcept { return *binomials_; }

  friend bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b) noexcept {
    return a.statistics_ == b.statistics_ && a.particles_ == b.particles_ &&
           a.orbitals_ == b.orbitals_;
  }

 private:
  Statistics statistics_;
  int particles_;
  int orbitals_;
  int hole_count_;
  Index dimension_;
  std::shared_ptr<const BinomialTable> binomials_;
};

/// N_conf of (statistics, N, M): C(M, N) for fermions, C(N+M-1, N) for bosons.
Index space_dimension(Statistics statistics, int particles, int orbitals);
inline Index space_dimension(const SpaceDescriptor& space) noexcept { return space.dimension(); }

/// Throws SpaceMismatch unless both spaces are equal.
void require_same_space(const SpaceDescriptor& a, const SpaceDescriptor& b, const char* what);

}  // namespace fock
