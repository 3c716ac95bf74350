// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <span>
#include <utility>
#include <vector>

#include "fock/fockspace.hpp"
#include "fock/hamiltonian.hpp"
#include "fock/kernel.hpp"

/// Two-component systems (Fermi-Fermi, Bose-Bose, Bose-Fermi).
///
/// The product space is addressed by (J_A, J_B), flattened row-major with
/// J_B fastest: linear = (J_A - 1) N^B_conf + J_B. A- and B-strings commute;
/// each species carries its own fermionic phase.
namespace fock::mixtures {

class MixtureSpace {
 public:
  MixtureSpace(SpaceDescriptor a, SpaceDescriptor b);

  const SpaceDescriptor& a() const noexcept { return a_; }
  const SpaceDescriptor& b() const noexcept { return b_; }
  Index dimension() const noexcept { return dimension_; }

  friend bool operator==(const MixtureSpace& x, const MixtureSpace& y) noexcept {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  SpaceDescriptor a_;
  SpaceDescriptor b_;
  Index dimension_;
};

/// Linear address of (J_A, J_B). Throws AddressError on out-of-range components.
Address mixture_address(Address ja, Address jb, const MixtureSpace& space);
/// Inverse of mixture_address.
std::pair<Address, Address> mixture_components(Address j, const MixtureSpace& space);

class MixtureStateVector {
 public:
  explicit MixtureStateVector(MixtureSpace space);
  MixtureStateVector(MixtureSpace space, std::vector<cplx> amplitudes);

  static MixtureStateVector basis(const MixtureSpace& space, Address ja, Address jb);
  static MixtureStateVector random(const MixtureSpace& space, std::uint64_t seed);
  /// u_A ⊗ v_B.
  static MixtureStateVector product(const StateVector& a, const StateVector& b);

  const MixtureSpace& space() const noexcept { return space_; }
  Index size() const noexcept { return amplitudes_.size(); }
  std::span<cplx> amplitudes() noexcept { return amplitudes_; }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }

  cplx& operator()(Address ja, Address jb);
  const cplx& operator()(Address ja, Address jb) const;

  double norm() const;

 private:
  MixtureSpace space_;
  std::vector<cplx> amplitudes_;
};

cplx dot(const MixtureStateVector& u, const MixtureStateVector& v);

/// W^AB_{k k' q q'}, coefficient of a†_k a_q b†_{k'} b_{q'}; k, q index species
/// A orbitals and k', q' species B orbitals (1-based).
class InterSpeciesTable {
 public:
  InterSpeciesTable() = default;
  InterSpeciesTable(int orbitals_a, int orbitals_b);

  int orbitals_a() const noexcept { return ma_; }
  int orbitals_b() const noexcept { return mb_; }
  cplx& operator()(int k, int kp, int q, int qp) { return data_[index(k, kp, q, qp)]; }
  const cplx& operator()(int k, int kp, int q, int qp) const { return data_[index(k, kp, q, qp)]; }

 private:
  std::size_t index(int k, int kp, int q, int qp) const;

  int ma_ = 0;
  int mb_ = 0;
  std::vector<cplx> data_;
};

struct MixtureHamiltonian {
  MixtureSpace space;
  HamiltonianSpec a;
  HamiltonianSpec b;
  InterSpeciesTable ab;

  explicit MixtureHamiltonian(MixtureSpace s)
      : space(s), a(s.a()), b(s.b()), ab(s.a().orbitals(), s.b().orbitals()) {}
};

struct MixtureValidationReport {
  ValidationReport a;
  ValidationReport b;
  bool hermitian_inter_species = true;
  double max_inter_species_deviation = 0.0;
  /// (k, k', q, q') with |W_{k k' q q'} - conj(W_{q q' k k'})| above tolerance.
  std::vector<std::array<int, 4>> inter_species_offenders;

  bool hermitian() const noexcept {
    return a.hermitian() && b.hermitian() && hermitian_inter_species;
  }
  std::string summary() const;
};

/// Checks hermiticity of both intra-species parts and of W^AB
/// (W_{k k' q q'} = conj(W_{q q' k k'})).
MixtureValidationReport validate(const MixtureHamiltonian& h, double tolerance = 1e-12);

enum class Part : std::uint8_t { IntraA, IntraB, Inter };

/// A mixture term: one operator string per species (identity where unused).
struct MixtureTerm {
  Part part;
  kernel::OperatorString a;
  kernel::OperatorString b;
  cplx coefficient;
};

std::vector<MixtureTerm> mixture_terms(const MixtureHamiltonian& h,
                                       const kernel::ApplyOptions& options = {});
/// Estimated cost (acted-subset size) of a term.
double term_weight(const MixtureSpace& space, const MixtureTerm& term);
/// out += coefficient * term(in).
void accumulate_term(const MixtureSpace& space, const MixtureTerm& term, std::span<const cplx> in,
                     std::span<cplx> out);

MixtureStateVector apply_intra_a(const kernel::OperatorString& op, const MixtureStateVector& psi);
MixtureStateVector apply_intra_a(const HamiltonianSpec& h, const MixtureStateVector& psi,
                                 const kernel::ApplyOptions& options = {});
MixtureStateVector apply_intra_b(const kernel::OperatorString& op, const MixtureStateVector& psi);
MixtureStateVector apply_intra_b(const HamiltonianSpec& h, const MixtureStateVector& psi,
                                 const kernel::ApplyOptions& options = {});
/// a†_k a_q b†_{k'} b_{q'} on psi.
MixtureStateVector apply_inter_term(int k, int kp, int q, int qp, const MixtureStateVector& psi);
MixtureStateVector apply_inter(const InterSpeciesTable& w, const MixtureStateVector& psi,
                               const kernel::ApplyOptions& options = {});
MixtureStateVector apply_mixture_hamiltonian(const MixtureHamiltonian& h,
                                             const MixtureStateVector& psi,
                                             const kernel::ApplyOptions& options = {});

}  // namespace fock::mixtures
