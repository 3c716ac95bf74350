// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "fock/fockspace.hpp"
#include "fock/hamiltonian.hpp"

/// Matrix-free application of second-quantized operators.
///
/// Every particle-conserving operator string maps a configuration to at most
/// one configuration times a prefactor. The kernel never forms a matrix: for
/// each term it enumerates the configurations the term acts on and gathers
/// output amplitudes from their unique source addresses.
namespace fock::kernel {

/// Highest operator rank the kernel handles (two-body).
inline constexpr int kMaxBody = 2;

/// Normal-ordered string b†_{c_1} ... b†_{c_n} b_{a_n} ... b_{a_1}, applied
/// right to left: annihilate a_1, ..., a_n, then create c_n, ..., c_1.
/// Orbitals are 1-based.
struct OperatorString {
  std::array<int, kMaxBody> creators{};
  std::array<int, kMaxBody> annihilators{};
  int rank = 0;

  /// b†_k b_q.
  static OperatorString one_body(int k, int q);
  /// b†_k b†_s b_l b_q.
  static OperatorString two_body(int k, int s, int l, int q);

  std::span<const int> created() const { return {creators.data(), static_cast<std::size_t>(rank)}; }
  std::span<const int> annihilated() const {
    return {annihilators.data(), static_cast<std::size_t>(rank)};
  }
};

/// Result of an operator string on one basis configuration.
struct ElementaryResult {
  Address target;
  double prefactor = 0.0;
  bool vanished = true;
};

/// One nonzero of the acted subset: output offset, source offset, prefactor.
struct Readdress {
  Index out;
  Index src;
  double prefactor;
};

/// Number of occupied orbitals strictly between k and q (1-based, k != q).
int fermion_sign_count(FermionBits config, int k, int q);

/// op|J> for a single basis configuration.
ElementaryResult apply_to_configuration(const SpaceDescriptor& space, const OperatorString& op,
                                        Address source);

/// Every (output, source, prefactor) triple with nonzero prefactor, built by
/// enumerating spectator configurations of the particles the string leaves
/// untouched. Prefactors follow the sequential elementary construction, so
/// coinciding indices (number operators, on-site terms) are handled.
std::vector<Readdress> acted_subset(const SpaceDescriptor& space, const OperatorString& op);

/// Size of the acted subset, computed without enumerating it.
Index acted_subset_size(const SpaceDescriptor& space, const OperatorString& op);

/// out[r.out] += coefficient * r.prefactor * in[r.src] for every entry.
void gather(std::span<const Readdress> subset, cplx coefficient, std::span<const cplx> in,
            std::span<cplx> out);

StateVector apply_string(const OperatorString& op, const StateVector& psi);
StateVector apply_one_body_term(int k, int q, const StateVector& psi);
StateVector apply_two_body_term(int k, int s, int l, int q, const StateVector& psi);

struct ApplyOptions {
  /// Terms with |coefficient| below this are skipped.
  double skip_threshold = 1e-15;
};

/// A coefficient-weighted operator string; two-body coefficients already
/// carry the 1/2 prefactor.
struct Term {
  OperatorString op;
  cplx coefficient;
};

/// Terms of `spec` in canonical order: one-body (k, q), then two-body
/// (k, s, q, l), each lexicographic.
std::vector<Term> hamiltonian_terms(const HamiltonianSpec& spec, const ApplyOptions& options = {});

/// out += coefficient * op * in for one term, streaming its acted subset.
void accumulate_term(const SpaceDescriptor& space, const Term& term, std::span<const cplx> in,
                     std::span<cplx> out);

/// Estimated cost of a term (its acted-subset size).
double term_weight(const SpaceDescriptor& space, const Term& term);

/// Sum of all terms applied to `in`, evaluated through the deterministic
/// grouped executor with the given worker count.
std::vector<cplx> apply_terms(const SpaceDescriptor& space, std::span<const Term> terms,
                              std::span<const cplx> in, std::size_t workers);

StateVector apply_hamiltonian(const HamiltonianSpec& spec, const StateVector& psi,
                              const ApplyOptions& options = {});
StateVector apply_one_body_operator(const OneBodyTable& h, const StateVector& psi,
                                    const ApplyOptions& options = {});

/// The explicit general-index formulas, used to cross-check the sequential
/// construction. They walk every output address, restore its configuration,
/// test the occupation conditions and read the source amplitude.
namespace closed_form {

/// Fermions: C^kq_J = C_{J^kq} (-1)^{d^kq_J} when k is occupied and q empty in J.
/// Bosons: C^kq_J = C_{J^kq} sqrt(n_k) sqrt(n_q + 1). Requires k != q.
StateVector apply_one_body(int k, int q, const StateVector& psi);

/// Requires k, s, l, q pairwise distinct.
/// Fermions: C_{J^kslq} (-1)^{d^kq_{J^sl}} (-1)^{d^sl_J} when k, s occupied and l, q empty in J.
/// Bosons: C_{J^kslq} sqrt(n_k) sqrt(n_s) sqrt(n_l + 1) sqrt(n_q + 1).
StateVector apply_two_body(int k, int s, int l, int q, const StateVector& psi);

}  // namespace closed_form

}  // namespace fock::kernel
