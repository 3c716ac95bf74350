// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "fock/space.hpp"
#include "fock/types.hpp"

namespace fock {

/// One configuration of a space as produced by iteration.
struct Configuration {
  Address address;
  OccupationVector occupations;
  /// Fermions only: hole labels and bit-set.
  HoleVector holes;
  FermionBits bits = 0;
};

/// Visits every configuration once, in increasing J order.
void for_each_configuration(const SpaceDescriptor& space,
                            const std::function<void(const Configuration&)>& visit);

/// Dense vector of N_conf complex amplitudes; offset J - 1 stores C_J.
class StateVector {
 public:
  explicit StateVector(SpaceDescriptor space);
  StateVector(SpaceDescriptor space, std::vector<cplx> amplitudes);

  static StateVector zero(const SpaceDescriptor& space) { return StateVector(space); }
  static StateVector basis(const SpaceDescriptor& space, Address j);
  /// Uniform random amplitudes in the unit square, normalized. Reproducible per seed.
  static StateVector random(const SpaceDescriptor& space, std::uint64_t seed);

  const SpaceDescriptor& space() const noexcept { return space_; }
  Index size() const noexcept { return amplitudes_.size(); }

  std::span<cplx> amplitudes() noexcept { return amplitudes_; }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  std::vector<cplx>& storage() noexcept { return amplitudes_; }

  cplx& operator[](Address j) { return amplitudes_[j.offset()]; }
  const cplx& operator[](Address j) const { return amplitudes_[j.offset()]; }
  cplx at(Address j) const;

  double norm() const;
  void normalize();
  StateVector& operator*=(cplx s);

 private:
  SpaceDescriptor space_;
  std::vector<cplx> amplitudes_;
};

/// sum_J conj(u_J) v_J.
cplx dot(const StateVector& u, const StateVector& v);
cplx dot(std::span<const cplx> u, std::span<const cplx> v);

/// y + alpha x as a new vector.
StateVector axpy(cplx alpha, const StateVector& x, const StateVector& y);
/// y <- y + alpha x.
void axpy_inplace(cplx alpha, const StateVector& x, StateVector& y);

double norm(std::span<const cplx> v);

/// Deterministic uniform [0, 1) doubles from a 64-bit Mersenne twister,
/// independent of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal();
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fock
