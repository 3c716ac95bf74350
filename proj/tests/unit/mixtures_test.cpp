// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "fock/error.hpp"
#include "fock/kernel.hpp"
#include "fock/mixtures.hpp"
#include "fock/oracle.hpp"
#include "random_models.hpp"

namespace fock {
namespace {

using mixtures::MixtureSpace;
using mixtures::MixtureStateVector;

std::vector<MixtureSpace> suite() {
  return {MixtureSpace(SpaceDescriptor::fermions(2, 3), SpaceDescriptor::fermions(2, 3)),
          MixtureSpace(SpaceDescriptor::bosons(2, 3), SpaceDescriptor::bosons(3, 2)),
          MixtureSpace(SpaceDescriptor::fermions(2, 4), SpaceDescriptor::bosons(2, 3)),
          MixtureSpace(SpaceDescriptor::bosons(1, 2), SpaceDescriptor::fermions(1, 3))};
}

TEST(Addressing, RowMajorWithBFastest) {
  const MixtureSpace space(SpaceDescriptor::fermions(2, 4), SpaceDescriptor::bosons(2, 3));
  EXPECT_EQ(space.dimension(), 36u);
  EXPECT_EQ(mixtures::mixture_address(Address(1), Address(1), space).value, 1u);
  EXPECT_EQ(mixtures::mixture_address(Address(1), Address(2), space).value, 2u);
  EXPECT_EQ(mixtures::mixture_address(Address(2), Address(1), space).value, 7u);
  EXPECT_EQ(mixtures::mixture_address(Address(6), Address(6), space).value, 36u);
  for (Index j = 1; j <= space.dimension(); ++j) {
    const auto [a, b] = mixtures::mixture_components(Address(j), space);
    EXPECT_EQ(mixtures::mixture_address(a, b, space).value, j);
  }
  EXPECT_THROW(mixtures::mixture_address(Address(7), Address(1), space), AddressError);
  EXPECT_THROW(mixtures::mixture_components(Address(37), space), AddressError);
}

TEST(States, ProductAndBasis) {
  const auto a = StateVector::random(SpaceDescriptor::fermions(1, 3), 1);
  const auto b = StateVector::random(SpaceDescriptor::bosons(2, 2), 2);
  const auto p = MixtureStateVector::product(a, b);
  EXPECT_NEAR(p.norm(), 1.0, 1e-14);
  EXPECT_EQ(p(Address(2), Address(3)), a[Address(2)] * b[Address(3)]);
  const auto e = MixtureStateVector::basis(p.space(), Address(3), Address(1));
  EXPECT_EQ(e(Address(3), Address(1)), cplx(1.0));
}

TEST(IntraSpecies, ActsOnProductFactor) {
  const MixtureSpace space(SpaceDescriptor::fermions(2, 4), SpaceDescriptor::bosons(2, 3));
  const auto ha = testing::random_hermitian_spec(space.a(), 1);
  const auto hb = testing::random_hermitian_spec(space.b(), 2);
  const auto u = StateVector::random(space.a(), 3);
  const auto v = StateVector::random(space.b(), 4);
  const auto psi = MixtureStateVector::product(u, v);
  const auto got_a = mixtures::apply_intra_a(ha, psi);
  const auto want_a = MixtureStateVector::product(kernel::apply_hamiltonian(ha, u), v);
  EXPECT_LE(testing::max_abs_diff(got_a.amplitudes(), want_a.amplitudes()), 1e-13);
  const auto got_b = mixtures::apply_intra_b(hb, psi);
  const auto want_b = MixtureStateVector::product(u, kernel::apply_hamiltonian(hb, v));
  EXPECT_LE(testing::max_abs_diff(got_b.amplitudes(), want_b.amplitudes()), 1e-13);
}

TEST(IntraSpecies, Commute) {
  for (const auto& space : suite()) {
    const auto ha = testing::random_hermitian_spec(space.a(), 5);
    const auto hb = testing::random_hermitian_spec(space.b(), 6);
    const auto psi = MixtureStateVector::random(space, 7);
    const auto ab = mixtures::apply_intra_a(ha, mixtures::apply_intra_b(hb, psi));
    const auto ba = mixtures::apply_intra_b(hb, mixtures::apply_intra_a(ha, psi));
    EXPECT_LE(testing::max_abs_diff(ab.amplitudes(), ba.amplitudes()), 1e-12);
  }
}

TEST(InterSpecies, ProductOfOneBodyActions) {
  const MixtureSpace space(SpaceDescriptor::fermions(2, 3), SpaceDescriptor::fermions(2, 3));
  const auto u = StateVector::random(space.a(), 1);
  const auto v = StateVector::random(space.b(), 2);
  const auto got = mixtures::apply_inter_term(1, 2, 3, 1, MixtureStateVector::product(u, v));
  const auto want = MixtureStateVector::product(kernel::apply_one_body_term(1, 3, u),
                                                kernel::apply_one_body_term(2, 1, v));
  EXPECT_LE(testing::max_abs_diff(got.amplitudes(), want.amplitudes()), 1e-14);
}

TEST(FullHamiltonian, MatchesDenseOracle) {
  for (const auto& space : suite()) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto h = testing::random_hermitian_mixture(space, 40 + seed);
      EXPECT_TRUE(mixtures::validate(h).hermitian());
      const auto dense = oracle::build_dense(h);
      EXPECT_TRUE(dense.is_hermitian(1e-12));
      const auto psi = MixtureStateVector::random(space, seed);
      const auto got = mixtures::apply_mixture_hamiltonian(h, psi);
      const auto want = dense.apply(psi.amplitudes());
      EXPECT_LE(testing::diff_norm(got.amplitudes(), want), 1e-12 * norm(want));
    }
  }
}

TEST(Validate, PinpointsInterSpeciesOffender) {
  const MixtureSpace space(SpaceDescriptor::bosons(1, 2), SpaceDescriptor::bosons(1, 2));
  auto h = testing::random_hermitian_mixture(space, 1);
  h.ab(2, 1, 1, 2) += 0.01;
  const auto r = mixtures::validate(h);
  EXPECT_FALSE(r.hermitian());
  EXPECT_TRUE(r.a.hermitian());
  ASSERT_EQ(r.inter_species_offenders.size(), 1u);
  EXPECT_EQ(r.inter_species_offenders[0], (std::array<int, 4>{1, 2, 2, 1}));
}

TEST(Apply, RejectsForeignState) {
  const MixtureSpace space(SpaceDescriptor::bosons(1, 2), SpaceDescriptor::bosons(1, 2));
  const MixtureSpace other(SpaceDescriptor::bosons(1, 2), SpaceDescriptor::bosons(2, 2));
  const mixtures::MixtureHamiltonian h(space);
  EXPECT_THROW(mixtures::apply_mixture_hamiltonian(h, MixtureStateVector::random(other, 1)),
               SpaceMismatch);
}

}  // namespace
}  // namespace fock
