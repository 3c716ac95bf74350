// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fock/fockspace.hpp"
#include "fock/hamiltonian.hpp"
#include "fock/mixtures.hpp"

/// Dense brute-force reference.
///
/// Matrix elements are derived by applying creation and annihilation
/// operators to explicit occupation lists, one operator at a time, with
/// fermionic phases counted over all lower orbitals and bosonic sqrt(n)
/// factors. The basis is labeled by unranking each address; targets are
/// found through a lookup table built from that enumeration. Nothing here
/// uses the kernel's acted-subset machinery.
namespace fock::oracle {

inline constexpr std::size_t kDefaultCap = 5000;

struct DenseOperator {
  /// (row J', column J) = coefficient of configuration J' in Op|J>, 0-based offsets.
  Eigen::MatrixXcd matrix;

  Eigen::Index dimension() const { return matrix.rows(); }
  bool is_hermitian(double tolerance) const;
  std::vector<cplx> apply(std::span<const cplx> psi) const;
};

/// Result of a single elementary operator sequence on an occupation list.
/// `ops` lists (orbital, is_creator) pairs applied left to right.
struct SymbolicResult {
  std::vector<int> occupations;
  double factor = 0.0;
  bool vanished = true;
};
SymbolicResult apply_symbolic(Statistics statistics, std::vector<int> occupations,
                              std::span<const std::pair<int, bool>> ops);

/// b†_k b_q as a dense matrix.
DenseOperator build_one_body_term(const SpaceDescriptor& space, int k, int q,
                                  std::size_t cap = kDefaultCap);
/// b†_k b†_s b_l b_q as a dense matrix.
DenseOperator build_two_body_term(const SpaceDescriptor& space, int k, int s, int l, int q,
                                  std::size_t cap = kDefaultCap);
DenseOperator build_dense(const HamiltonianSpec& spec, std::size_t cap = kDefaultCap);
DenseOperator build_dense(const mixtures::MixtureHamiltonian& h, std::size_t cap = kDefaultCap);

struct DenseSpectrum {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors;  // columns
};

/// Throws ValidationError for non-Hermitian input.
DenseSpectrum dense_eig(const DenseOperator& op);

/// exp(-i op t) psi via the spectral decomposition.
std::vector<cplx> dense_expm_apply(const DenseOperator& op, std::span<const cplx> psi, double t);
std::vector<cplx> dense_expm_apply(const DenseSpectrum& spectrum, std::span<const cplx> psi,
                                   double t);

}  // namespace fock::oracle
