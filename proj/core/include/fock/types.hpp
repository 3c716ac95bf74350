// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

namespace fock {

using cplx = std::complex<double>;

/// Unsigned integer type used for configuration counts and addresses.
using Index = std::uint64_t;

/// Occupation bit-set of a fermionic configuration: bit (k-1) set <=> orbital k occupied.
using FermionBits = std::uint64_t;

/// Largest orbital count supported by the fermionic bit-set representation.
inline constexpr int kMaxFermionOrbitals = 64;

enum class Statistics : std::uint8_t { Fermion = 0, Boson = 1 };

constexpr std::string_view to_string(Statistics s) noexcept {
  return s == Statistics::Fermion ? "fermion" : "boson";
}

/// 1-based configuration address J in [1, N_conf].
struct Address {
  Index value = 1;

  constexpr Address() = default;
  constexpr explicit Address(Index j) : value(j) {}

  /// Offset into an amplitude array (J - 1).
  constexpr Index offset() const noexcept { return value - 1; }
  static constexpr Address from_offset(Index off) noexcept { return Address(off + 1); }

  friend constexpr auto operator<=>(Address, Address) = default;
};

/// Strictly increasing 1-based positions of unoccupied orbitals.
struct HoleVector {
  std::vector<int> holes;
  friend bool operator==(const HoleVector&, const HoleVector&) = default;
};

/// Particle count per orbital, n_1 ... n_M.
struct OccupationVector {
  std::vector<int> n;
  friend bool operator==(const OccupationVector&, const OccupationVector&) = default;
};

}  // namespace fock
