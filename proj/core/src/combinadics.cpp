// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/combinadics.hpp"

#include <numeric>
#include <string>

#include "fock/error.hpp"

namespace fock::combinadics {

namespace {

// Greedy digit extraction of `offset` against C(m_label - i, mv + 1 - k).
std::vector<int> unrank_holes(Index offset, int m_label, int mv, const BinomialTable& c) {
  std::vector<int> holes;
  holes.reserve(mv);
  int i = 0;
  for (int k = 1; k <= mv; ++k) {
    const int digit = mv + 1 - k;
    for (++i;; ++i) {
      const Index term = c(m_label - i, digit);
      if (term <= offset) {
        offset -= term;
        break;
      }
    }
    holes.push_back(i);
  }
  return holes;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

void validate(const HoleVector& holes, const SpaceDescriptor& space) {
  if (!space.is_fermionic()) {
    throw InvalidConfiguration("hole labels require a fermionic space");
  }
  const auto& h = holes.holes;
  if (static_cast<int>(h.size()) != space.hole_count()) {
    throw InvalidConfiguration("expected " + std::to_string(space.hole_count()) +
                               " holes, got " + std::to_string(h.size()) + " (" + join(h) + ")");
  }
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] < 1 || h[k] > space.orbitals()) {
      throw InvalidConfiguration("hole position " + std::to_string(h[k]) + " outside [1, " +
                                 std::to_string(space.orbitals()) + "]");
    }
    if (k > 0 && h[k] <= h[k - 1]) {
      throw InvalidConfiguration("hole positions must be strictly increasing (" + join(h) + ")");
    }
  }
}

void validate(const OccupationVector& occ, const SpaceDescriptor& space) {
  const auto& n = occ.n;
  if (static_cast<int>(n.size()) != space.orbitals()) {
    throw InvalidConfiguration("expected " + std::to_string(space.orbitals()) +
                               " occupations, got " + std::to_string(n.size()));
  }
  long total = 0;
  for (int x : n) {
    if (x < 0) throw InvalidConfiguration("negative occupation in (" + join(n) + ")");
    if (space.is_fermionic() && x > 1) {
      throw InvalidConfiguration("fermionic occupation above 1 in (" + join(n) + ")");
    }
    total += x;
  }
  if (total != space.particles()) {
    throw InvalidConfiguration("occupations (" + join(n) + ") sum to " + std::to_string(total) +
                               ", expected " + std::to_string(space.particles()));
  }
}

void validate(Address j, const SpaceDescriptor& space) {
  if (j.value < 1 || j.value > space.dimension()) {
    throw AddressError("address " + std::to_string(j.value) + " outside [1, " +
                       std::to_string(space.dimension()) + "]");
  }
}

Address fermion_rank(const HoleVector& holes, const SpaceDescriptor& space) {
  validate(holes, space);
  const BinomialTable& c = space.binomials();
  const int m = space.orbitals();
  const int mv = space.hole_count();
  Index offset = 0;
  for (int k = 1; k <= mv; ++k) offset += c(m - holes.holes[k - 1], mv + 1 - k);
  return Address::from_offset(offset);
}

HoleVector fermion_unrank(Address j, const SpaceDescriptor& space) {
  if (!space.is_fermionic()) throw InvalidConfiguration("fermion_unrank on a bosonic space");
  validate(j, space);
  return {unrank_holes(j.offset(), space.orbitals(), space.hole_count(), space.binomials())};
}

Address boson_rank(const OccupationVector& occ, const SpaceDescriptor& space) {
  if (space.is_fermionic()) throw InvalidConfiguration("boson_rank on a fermionic space");
  validate(occ, space);
  return Address::from_offset(rank_occupations(occ.n, space));
}

OccupationVector boson_unrank(Address j, const SpaceDescriptor& space) {
  if (space.is_fermionic()) throw InvalidConfiguration("boson_unrank on a fermionic space");
  validate(j, space);
  const HoleVector holes{
      unrank_holes(j.offset(), space.labeling_orbitals(), space.hole_count(), space.binomials())};
  return fermion_to_boson(holes, space.particles());
}

HoleVector boson_to_fermion(const OccupationVector& occ) {
  if (occ.n.empty()) throw InvalidConfiguration("bosonic configuration needs M >= 1");
  HoleVector out;
  out.holes.reserve(occ.n.size() - 1);
  int position = 0;
  for (std::size_t k = 0; k + 1 < occ.n.size(); ++k) {
    if (occ.n[k] < 0) throw InvalidConfiguration("negative occupation");
    position += occ.n[k] + 1;
    out.holes.push_back(position);
  }
  if (occ.n.back() < 0) throw InvalidConfiguration("negative occupation");
  return out;
}

OccupationVector fermion_to_boson(const HoleVector& holes, int particles) {
  const auto& h = holes.holes;
  const int m = static_cast<int>(h.size()) + 1;
  OccupationVector occ;
  occ.n.resize(m);
  int previous = 0;
  for (int k = 0; k + 1 < m; ++k) {
    occ.n[k] = h[k] - previous - 1;
    if (occ.n[k] < 0) throw InvalidConfiguration("hole positions must be strictly increasing");
    previous = h[k];
  }
  occ.n[m - 1] = particles + m - previous - 1;
  if (occ.n[m - 1] < 0) throw InvalidConfiguration("hole position beyond N + M - 1");
  return occ;
}

FermionBits bits_from_holes(const HoleVector& holes, int orbitals) {
  FermionBits bits = orbitals == 64 ? ~FermionBits{0} : ((FermionBits{1} << orbitals) - 1);
  for (int i : holes.holes) bits &= ~(FermionBits{1} << (i - 1));
  return bits;
}

HoleVector holes_from_bits(FermionBits bits, int orbitals) {
  HoleVector h;
  for (int k = 1; k <= orbitals; ++k) {
    if (!((bits >> (k - 1)) & 1)) h.holes.push_back(k);
  }
  return h;
}

OccupationVector occupations_from_bits(FermionBits bits, int orbitals) {
  OccupationVector occ;
  occ.n.resize(orbitals);
  for (int k = 0; k < orbitals; ++k) occ.n[k] = static_cast<int>((bits >> k) & 1);
  return occ;
}

FermionBits bits_from_occupations(const OccupationVector& occ) {
  FermionBits bits = 0;
  for (std::size_t k = 0; k < occ.n.size(); ++k) {
    if (occ.n[k]) bits |= FermionBits{1} << k;
  }
  return bits;
}

Address rank(const OccupationVector& occ, const SpaceDescriptor& space) {
  if (space.is_fermionic()) {
    validate(occ, space);
    return fermion_rank(holes_from_bits(bits_from_occupations(occ), space.orbitals()), space);
  }
  return boson_rank(occ, space);
}

OccupationVector unrank(Address j, const SpaceDescriptor& space) {
  if (space.is_fermionic()) {
    const HoleVector h = fermion_unrank(j, space);
    return occupations_from_bits(bits_from_holes(h, space.orbitals()), space.orbitals());
  }
  return boson_unrank(j, space);
}

}  // namespace fock::combinadics
