// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "fock/combinadics.hpp"
#include "fock/observables.hpp"
#include "random_models.hpp"

namespace fock {
namespace {

std::vector<SpaceDescriptor> spaces() {
  return {SpaceDescriptor::fermions(3, 6), SpaceDescriptor::bosons(3, 4),
          SpaceDescriptor::fermions(2, 4), SpaceDescriptor::bosons(4, 2)};
}

TEST(OneBody, TraceAndHermiticity) {
  for (const auto& space : spaces()) {
    const auto psi = StateVector::random(space, 3);
    const auto rho = observables::one_body_density(psi);
    EXPECT_NEAR(std::abs(rho.trace() - cplx(space.particles())), 0.0, 1e-12);
    EXPECT_LE(rho.hermiticity_error(), 1e-13);
    const auto occ = rho.natural_occupations();
    EXPECT_TRUE(std::is_sorted(occ.rbegin(), occ.rend()));
    for (double n : occ) {
      EXPECT_GE(n, -1e-12);
      if (space.is_fermionic()) EXPECT_LE(n, 1.0 + 1e-12);
    }
  }
}

TEST(OneBody, BasisStateIsDiagonal) {
  const auto space = SpaceDescriptor::bosons(3, 3);
  const auto psi = StateVector::basis(space, combinadics::rank({{2, 0, 1}}, space));
  const auto rho = observables::one_body_density(psi);
  EXPECT_EQ(rho(1, 1), cplx(2.0));
  EXPECT_EQ(rho(2, 2), cplx(0.0));
  EXPECT_EQ(rho(3, 3), cplx(1.0));
  EXPECT_EQ(rho(1, 3), cplx(0.0));
}

TEST(TwoBody, Contractions) {
  for (const auto& space : spaces()) {
    const auto psi = StateVector::random(space, 4);
    const auto rho1 = observables::one_body_density(psi);
    const auto rho2 = observables::two_body_density(psi);
    const double n = space.particles();
    EXPECT_NEAR(std::abs(rho2.pair_trace() - cplx(n * (n - 1))), 0.0, 1e-11);
    for (int k = 1; k <= space.orbitals(); ++k) {
      for (int q = 1; q <= space.orbitals(); ++q) {
        EXPECT_NEAR(std::abs(rho2.partial_trace(k, q) - (n - 1) * rho1(k, q)), 0.0, 1e-12);
      }
    }
  }
}

TEST(TwoBody, FermionAntisymmetry) {
  const auto psi = StateVector::random(SpaceDescriptor::fermions(3, 5), 6);
  const auto rho2 = observables::two_body_density(psi);
  for (int k = 1; k <= 5; ++k) {
    for (int s = 1; s <= 5; ++s) {
      EXPECT_NEAR(std::abs(rho2(k, s, 2, 4) + rho2(s, k, 2, 4)), 0.0, 1e-13);
      EXPECT_EQ(rho2(k, k, 2, 4), cplx{});
    }
  }
}

TEST(TwoBody, NotationAccessors) {
  const auto psi = StateVector::random(SpaceDescriptor::bosons(2, 3), 1);
  const auto rho2 = observables::two_body_density(psi);
  EXPECT_EQ(rho2.physicist(1, 2, 3, 1), rho2(1, 2, 1, 3));
  EXPECT_EQ(rho2.chemist(1, 3, 2, 1), rho2(1, 2, 1, 3));
  EXPECT_EQ(observables::two_body_element(psi, 1, 2, 1, 3), rho2(1, 2, 1, 3));
}

TEST(Energy, EqualsDensityContraction) {
  for (const auto& space : spaces()) {
    const auto spec = testing::random_hermitian_spec(space, 8);
    const auto psi = StateVector::random(space, 9);
    const auto rho1 = observables::one_body_density(psi);
    const auto rho2 = observables::two_body_density(psi);
    cplx e{};
    const int m = space.orbitals();
    for (int k = 1; k <= m; ++k) {
      for (int q = 1; q <= m; ++q) e += spec.one_body(k, q) * rho1(k, q);
    }
    spec.two_body.for_each_nonzero(
        [&](int k, int s, int q, int l, cplx w) { e += 0.5 * w * rho2(k, s, l, q); });
    const cplx direct = observables::energy(spec, psi);
    EXPECT_NEAR(std::abs(direct - e), 0.0, 1e-11);
    EXPECT_NEAR(direct.imag(), 0.0, 1e-12);
  }
}

TEST(Mixture, SpeciesDensitiesTrace) {
  const mixtures::MixtureSpace space(SpaceDescriptor::fermions(2, 4), SpaceDescriptor::bosons(3, 3));
  const auto psi = mixtures::MixtureStateVector::random(space, 2);
  const auto [a, b] = observables::mixture_densities(psi);
  EXPECT_NEAR(std::abs(a.trace() - 2.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(b.trace() - 3.0), 0.0, 1e-12);
  const auto h = testing::random_hermitian_mixture(space, 3);
  EXPECT_NEAR(observables::energy(h, psi).imag(), 0.0, 1e-12);
}

TEST(Serialization, JsonAndCsv) {
  const auto psi = StateVector::random(SpaceDescriptor::fermions(2, 3), 1);
  const auto rho1 = observables::one_body_density(psi);
  const auto j = observables::to_json(rho1);
  EXPECT_EQ(j.at("orbitals"), 3);
  EXPECT_EQ(j.at("rho").size(), 3u);
  EXPECT_DOUBLE_EQ(j.at("rho")[0][1][0].get<double>(), rho1(1, 2).real());
  const auto csv = observables::to_csv(rho1);
  EXPECT_EQ(csv.substr(0, 10), "k,q,re,im\n");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
  const auto j2 = observables::to_json(observables::two_body_density(psi));
  EXPECT_EQ(j2.at("format"), "dense");
  const auto big = observables::to_json(
      observables::two_body_density(StateVector::basis(SpaceDescriptor::fermions(2, 9), Address(1))));
  EXPECT_EQ(big.at("format"), "coo");
  EXPECT_EQ(big.at("entries").size(), 4u);
}

}  // namespace
}  // namespace fock
