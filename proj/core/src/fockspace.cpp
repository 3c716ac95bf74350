// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/fockspace.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fock/combinadics.hpp"
#include "fock/error.hpp"

namespace fock {

namespace {

// Increasing J is decreasing lexicographic order of the occupation string.
bool next_fermion(std::vector<int>& n) {
  const int m = static_cast<int>(n.size());
  int j = m - 2;
  while (j >= 0 && !(n[j] == 1 && n[j + 1] == 0)) --j;
  if (j < 0) return false;
  n[j] = 0;
  n[j + 1] = 1;
  int tail = 0;
  for (int i = j + 2; i < m; ++i) {
    tail += n[i];
    n[i] = 0;
  }
  for (int i = j + 2; i < j + 2 + tail; ++i) n[i] = 1;
  return true;
}

bool next_boson(std::vector<int>& n) {
  const int m = static_cast<int>(n.size());
  int j = m - 2;
  while (j >= 0 && n[j] == 0) --j;
  if (j < 0) return false;
  --n[j];
  int tail = 1;
  for (int i = j + 1; i < m; ++i) {
    tail += n[i];
    n[i] = 0;
  }
  n[j + 1] = tail;
  return true;
}

}  // namespace

void for_each_configuration(const SpaceDescriptor& space,
                            const std::function<void(const Configuration&)>& visit) {
  Configuration c;
  c.occupations = combinadics::unrank(Address(1), space);
  Index j = 1;
  while (true) {
    c.address = Address(j);
    if (space.is_fermionic()) {
      c.bits = combinadics::bits_from_occupations(c.occupations);
      c.holes = combinadics::holes_from_bits(c.bits, space.orbitals());
    }
    visit(c);
    const bool more =
        space.is_fermionic() ? next_fermion(c.occupations.n) : next_boson(c.occupations.n);
    if (!more) break;
    ++j;
  }
}

StateVector::StateVector(SpaceDescriptor space)
    : space_(space), amplitudes_(space.dimension(), cplx{}) {}

StateVector::StateVector(SpaceDescriptor space, std::vector<cplx> amplitudes)
    : space_(space), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.dimension()) {
    throw SpaceMismatch("amplitude count " + std::to_string(amplitudes_.size()) +
                        " does not match N_conf = " + std::to_string(space_.dimension()));
  }
}

StateVector StateVector::basis(const SpaceDescriptor& space, Address j) {
  combinadics::validate(j, space);
  StateVector v(space);
  v[j] = 1.0;
  return v;
}

StateVector StateVector::random(const SpaceDescriptor& space, std::uint64_t seed) {
  StateVector v(space);
  Rng rng(seed);
  for (auto& a : v.amplitudes_) a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  v.normalize();
  return v;
}

cplx StateVector::at(Address j) const {
  combinadics::validate(j, space_);
  return amplitudes_[j.offset()];
}

double StateVector::norm() const { return fock::norm(amplitudes_); }

void StateVector::normalize() {
  const double n = norm();
  if (n > 0) *this *= 1.0 / n;
}

StateVector& StateVector::operator*=(cplx s) {
  for (auto& a : amplitudes_) a *= s;
  return *this;
}

cplx dot(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw SpaceMismatch("dot: length mismatch");
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    // conj(u) * v
    re += u[i].real() * v[i].real() + u[i].imag() * v[i].imag();
    im += u[i].real() * v[i].imag() - u[i].imag() * v[i].real();
  }
  return {re, im};
}

cplx dot(const StateVector& u, const StateVector& v) {
  require_same_space(u.space(), v.space(), "dot");
  return dot(u.amplitudes(), v.amplitudes());
}

double norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return std::sqrt(s);
}

StateVector axpy(cplx alpha, const StateVector& x, const StateVector& y) {
  StateVector out = y;
  axpy_inplace(alpha, x, out);
  return out;
}

void axpy_inplace(cplx alpha, const StateVector& x, StateVector& y) {
  require_same_space(x.space(), y.space(), "axpy");
  auto xs = x.amplitudes();
  auto ys = y.amplitudes();
  for (std::size_t i = 0; i < ys.size(); ++i) ys[i] += alpha * xs[i];
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace fock
