// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fock/fockspace.hpp"
#include "fock/hamiltonian.hpp"
#include "fock/mixtures.hpp"

/// Krylov solvers driven only by operator application, dot and axpy.
namespace fock::solvers {

/// y = H x for a Hermitian operator of the given dimension.
struct LinearMap {
  std::size_t dimension = 0;
  std::function<void(std::span<const cplx> x, std::span<cplx> y)> apply;
};

LinearMap make_map(const HamiltonianSpec& spec, std::size_t workers = 1);
LinearMap make_map(const mixtures::MixtureHamiltonian& h, std::size_t workers = 1);

/// Eigenvalues (ascending) and eigenvectors (column-major, n x n) of a real
/// symmetric tridiagonal matrix by implicit QL.
struct TridiagonalEigen {
  std::vector<double> values;
  std::vector<double> vectors;
};
TridiagonalEigen tridiagonal_eigen(std::span<const double> diagonal,
                                   std::span<const double> off_diagonal);

struct LanczosOptions {
  double tolerance = 1e-9;  // on ||H psi - E psi||
  int max_iterations = 1000;  // total operator applications
  int restart_dimension = 200;
  std::uint64_t seed = 1;
};

struct EigenPair {
  double energy = 0.0;
  std::vector<cplx> vector;
  double residual = 0.0;
  int iterations = 0;
};

/// Lowest eigenpair by restarted Lanczos with full re-orthogonalization.
/// Throws ConvergenceError carrying the best residual.
EigenPair lanczos_ground_state(const LinearMap& h, const LanczosOptions& options);

struct GroundState {
  double energy = 0.0;
  StateVector state;
  double residual = 0.0;
  int iterations = 0;
};

/// Validates hermiticity (ValidationError otherwise) and runs Lanczos.
GroundState ground_state(const HamiltonianSpec& spec, double tolerance, int max_iterations,
                         std::uint64_t seed, std::size_t workers = 1);

struct MixtureGroundState {
  double energy = 0.0;
  mixtures::MixtureStateVector state;
  double residual = 0.0;
  int iterations = 0;
};
MixtureGroundState ground_state(const mixtures::MixtureHamiltonian& h, double tolerance,
                                int max_iterations, std::uint64_t seed, std::size_t workers = 1);

struct PropagationOptions {
  double t_final = 1.0;
  /// Output interval; internal steps are shortened to keep the error estimate
  /// below `error_tolerance`.
  double dt = 0.05;
  int krylov_dimension = 15;
  double error_tolerance = 1e-12;
  /// Smallest admissible internal step, relative to dt.
  double min_step_fraction = 1e-8;
  bool keep_snapshots = false;
};

/// Observables evaluated at each output time; receives the current state.
using SampleFn = std::function<std::vector<double>(std::span<const cplx> psi)>;

struct PropagationResult {
  std::vector<double> times;
  std::vector<double> norms;
  std::vector<double> energies;
  /// Per output time, whatever the sample function returned.
  std::vector<std::vector<double>> samples;
  /// Per internal step: size and error estimate.
  std::vector<double> step_sizes;
  std::vector<double> step_errors;
  std::vector<std::vector<cplx>> snapshots;
  std::vector<cplx> final_state;

  double max_norm_drift() const;
  double max_energy_drift() const;
};

/// psi(t + h) = exp(-i H h) psi(t) by short iterative Lanczos. The per-step
/// error estimate is (h^m / m!) prod_j beta_j; a Krylov breakdown makes the
/// step exact. Throws StepFailure when the estimate cannot be met.
PropagationResult propagate(const LinearMap& h, std::span<const cplx> psi0,
                            const PropagationOptions& options, const SampleFn& sample = {});

/// Single-species convenience: samples site densities <n_k>.
PropagationResult propagate(const HamiltonianSpec& spec, const StateVector& psi0,
                            const PropagationOptions& options, std::size_t workers = 1);
/// Mixture convenience: samples <n^A_k> then <n^B_k>.
PropagationResult propagate(const mixtures::MixtureHamiltonian& h,
                            const mixtures::MixtureStateVector& psi0,
                            const PropagationOptions& options, std::size_t workers = 1);

/// CSV: "# fock-series-1" line, header time,norm,energy,<columns...>, one row per sample.
std::string series_csv(const PropagationResult& result, const std::vector<std::string>& columns);

}  // namespace fock::solvers
