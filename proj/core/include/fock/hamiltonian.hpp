// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fock/space.hpp"
#include "fock/types.hpp"

namespace fock {

/// h_kq, the coefficient of b†_k b_q. Indices are 1-based.
class OneBodyTable {
 public:
  OneBodyTable() = default;
  explicit OneBodyTable(int orbitals);

  int orbitals() const noexcept { return m_; }
  cplx& operator()(int k, int q) { return data_[index(k, q)]; }
  const cplx& operator()(int k, int q) const { return data_[index(k, q)]; }

 private:
  std::size_t index(int k, int q) const;

  int m_ = 0;
  std::vector<cplx> data_;
};

/// W_ksql, the coefficient of b†_k b†_s b_l b_q (subscripts in storage order
/// k, s, q, l; operators in order k, s, l, q). Pairing is (k with q) and
/// (s with l). Dense up to kDenseTwoBodyLimit orbitals, sparse beyond.
class TwoBodyTable {
 public:
  static constexpr int kDenseTwoBodyLimit = 32;

  TwoBodyTable() = default;
  explicit TwoBodyTable(int orbitals);

  int orbitals() const noexcept { return m_; }
  bool is_dense() const noexcept { return m_ <= kDenseTwoBodyLimit; }

  cplx get(int k, int s, int q, int l) const;
  void set(int k, int s, int q, int l, cplx value);
  void add(int k, int s, int q, int l, cplx value) { set(k, s, q, l, get(k, s, q, l) + value); }

  /// Visits entries with nonzero value in (k, s, q, l) lexicographic order.
  void for_each_nonzero(const std::function<void(int k, int s, int q, int l, cplx w)>& visit) const;

  /// Returns the table symmetrized under the particle exchange
  /// (k, s, q, l) -> (s, k, l, q), which leaves the operator unchanged.
  TwoBodyTable symmetrized() const;

 private:
  std::size_t index(int k, int s, int q, int l) const;

  int m_ = 0;
  std::vector<cplx> dense_;
  std::map<std::size_t, cplx> sparse_;
};

/// H = sum_kq h_kq b†_k b_q + 1/2 sum_ksql W_ksql b†_k b†_s b_l b_q.
struct HamiltonianSpec {
  SpaceDescriptor space;
  OneBodyTable one_body;
  TwoBodyTable two_body;

  explicit HamiltonianSpec(SpaceDescriptor s)
      : space(s), one_body(s.orbitals()), two_body(s.orbitals()) {}
};

struct ValidationReport {
  bool hermitian_one_body = true;
  bool self_adjoint_two_body = true;
  double max_one_body_deviation = 0.0;
  double max_two_body_deviation = 0.0;
  /// (k, q) with |h_kq - conj(h_qk)| above tolerance.
  std::vector<std::array<int, 2>> one_body_offenders;
  /// (k, s, q, l) with |W_ksql - conj(W_qlks)| above tolerance.
  std::vector<std::array<int, 4>> two_body_offenders;

  bool hermitian() const noexcept { return hermitian_one_body && self_adjoint_two_body; }
  std::string summary() const;
};

/// Checks hermiticity of h and W within `tolerance`. Throws ValidationError
/// when table sizes do not match the space.
ValidationReport validate(const HamiltonianSpec& spec, double tolerance = 1e-12);

/// Chain of `sites` orbitals with hopping h_{k,k±1} = -hopping and on-site
/// W_kkkk = interaction, i.e. (U/2) sum n_k (n_k - 1). `ring` adds the bond
/// between the last and first site when sites >= 3.
HamiltonianSpec build_bose_hubbard(int sites, int particles, double hopping, double interaction,
                                   bool ring);

}  // namespace fock
