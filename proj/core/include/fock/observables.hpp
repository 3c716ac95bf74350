// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fock/fockspace.hpp"
#include "fock/hamiltonian.hpp"
#include "fock/mixtures.hpp"

/// Expectation values as dot-products of incoming and resulting vectors.
namespace fock::observables {

/// rho_kq = <Psi| b†_k b_q |Psi>, 1-based.
class OneBodyDensity {
 public:
  OneBodyDensity() = default;
  explicit OneBodyDensity(int orbitals);

  int orbitals() const noexcept { return m_; }
  cplx& operator()(int k, int q) { return data_[(k - 1) * m_ + (q - 1)]; }
  const cplx& operator()(int k, int q) const { return data_[(k - 1) * m_ + (q - 1)]; }

  cplx trace() const;
  /// max |rho_kq - conj(rho_qk)|.
  double hermiticity_error() const;
  /// Eigenvalues of the Hermitian part, descending.
  std::vector<double> natural_occupations() const;

  friend bool operator==(const OneBodyDensity&, const OneBodyDensity&) = default;

 private:
  int m_ = 0;
  std::vector<cplx> data_;
};

/// rho_kslq = <Psi| b†_k b†_s b_l b_q |Psi>, 1-based, dense M^4.
///
/// Stored in the (k, s, l, q) operator order. In physicist notation
/// Gamma(k s; q l) pairs k with q and s with l, so Gamma = rho_kslq; in
/// chemist notation (k q | s l) = rho_kslq.
class TwoBodyDensity {
 public:
  TwoBodyDensity() = default;
  explicit TwoBodyDensity(int orbitals);

  int orbitals() const noexcept { return m_; }
  cplx& operator()(int k, int s, int l, int q) { return data_[index(k, s, l, q)]; }
  const cplx& operator()(int k, int s, int l, int q) const { return data_[index(k, s, l, q)]; }

  /// Gamma(k s; q l) = <b†_k b†_s b_l b_q>.
  cplx physicist(int k, int s, int q, int l) const { return (*this)(k, s, l, q); }
  /// (k q | s l) = <b†_k b†_s b_l b_q>.
  cplx chemist(int k, int q, int s, int l) const { return (*this)(k, s, l, q); }

  /// sum_{k,s} <b†_k b†_s b_s b_k>, equal to N(N-1).
  cplx pair_trace() const;
  /// sum_s <b†_k b†_s b_s b_q>, equal to (N-1) rho_kq.
  cplx partial_trace(int k, int q) const;

  friend bool operator==(const TwoBodyDensity&, const TwoBodyDensity&) = default;

 private:
  std::size_t index(int k, int s, int l, int q) const {
    return ((static_cast<std::size_t>(k - 1) * m_ + (s - 1)) * m_ + (l - 1)) * m_ + (q - 1);
  }

  int m_ = 0;
  std::vector<cplx> data_;
};

/// Single element <Psi| b†_k b_q |Psi>.
cplx one_body_element(const StateVector& psi, int k, int q);
/// Single element <Psi| b†_k b†_s b_l b_q |Psi>.
cplx two_body_element(const StateVector& psi, int k, int s, int l, int q);

OneBodyDensity one_body_density(const StateVector& psi);
TwoBodyDensity two_body_density(const StateVector& psi);

/// <Psi|H|Psi> as dot(psi, H psi).
cplx energy(const HamiltonianSpec& spec, const StateVector& psi);
cplx energy(const mixtures::MixtureHamiltonian& h, const mixtures::MixtureStateVector& psi);

/// Species-resolved one-body densities (A, B) of a mixture state.
std::pair<OneBodyDensity, OneBodyDensity> mixture_densities(
    const mixtures::MixtureStateVector& psi);

/// {"orbitals": M, "rho": [[[re, im], ...], ...], "trace": [re, im],
///  "natural_occupations": [...]}
nlohmann::json to_json(const OneBodyDensity& rho);
/// Dense nested list for M <= 8, else {"format": "coo", "entries": [[k, s, l, q, re, im], ...]}
/// with entries of magnitude above 1e-14.
nlohmann::json to_json(const TwoBodyDensity& rho);
/// "k,q,re,im" header, then one line per element.
std::string to_csv(const OneBodyDensity& rho);

}  // namespace fock::observables
