// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "fock/combinadics.hpp"
#include "fock/error.hpp"
#include "fock/kernel.hpp"
#include "fock/oracle.hpp"
#include "random_models.hpp"

namespace fock {
namespace {

using kernel::OperatorString;

Address addr(const SpaceDescriptor& s, std::vector<int> occ) {
  return combinadics::rank({std::move(occ)}, s);
}

TEST(Elementary, FermionHopSign) {
  const auto s = SpaceDescriptor::fermions(2, 4);
  const auto r = kernel::apply_to_configuration(s, OperatorString::one_body(1, 3), addr(s, {0, 1, 1, 0}));
  ASSERT_FALSE(r.vanished);
  EXPECT_EQ(r.target, addr(s, {1, 1, 0, 0}));
  EXPECT_EQ(r.prefactor, -1.0);
}

TEST(Elementary, FermionPauliBlocking) {
  const auto s = SpaceDescriptor::fermions(2, 4);
  EXPECT_TRUE(kernel::apply_to_configuration(s, OperatorString::one_body(2, 3), addr(s, {0, 1, 1, 0})).vanished);
  EXPECT_TRUE(kernel::apply_to_configuration(s, OperatorString::one_body(1, 4), addr(s, {0, 1, 1, 0})).vanished);
  EXPECT_TRUE(kernel::apply_to_configuration(s, OperatorString::two_body(1, 1, 2, 3), addr(s, {0, 1, 1, 0})).vanished);
}

TEST(Elementary, BosonFactors) {
  const auto s = SpaceDescriptor::bosons(3, 2);
  const auto r = kernel::apply_to_configuration(s, OperatorString::one_body(1, 2), addr(s, {1, 2}));
  ASSERT_FALSE(r.vanished);
  EXPECT_EQ(r.target, addr(s, {2, 1}));
  EXPECT_NEAR(r.prefactor, std::sqrt(2.0) * std::sqrt(2.0), 1e-15);
  const auto pair = kernel::apply_to_configuration(s, OperatorString::two_body(1, 1, 2, 2), addr(s, {1, 2}));
  EXPECT_EQ(pair.target, addr(s, {3, 0}));
  EXPECT_NEAR(pair.prefactor, std::sqrt(2.0 * 1.0 * 2.0 * 3.0), 1e-14);
  EXPECT_TRUE(kernel::apply_to_configuration(s, OperatorString::one_body(1, 2), addr(s, {3, 0})).vanished);
}

TEST(Elementary, SignCount) {
  EXPECT_EQ(kernel::fermion_sign_count(0b1111, 1, 4), 2);
  EXPECT_EQ(kernel::fermion_sign_count(0b1111, 4, 1), 2);
  EXPECT_EQ(kernel::fermion_sign_count(0b1010, 1, 3), 1);
  EXPECT_EQ(kernel::fermion_sign_count(0b1111, 2, 3), 0);
}

TEST(ActedSubset, MatchesPerConfigurationApplication) {
  for (const auto& space : {SpaceDescriptor::fermions(3, 6), SpaceDescriptor::bosons(3, 4),
                            SpaceDescriptor::fermions(2, 5), SpaceDescriptor::bosons(4, 3)}) {
    const int m = space.orbitals();
    std::vector<OperatorString> ops;
    for (int k = 1; k <= m; ++k) {
      for (int q = 1; q <= m; ++q) ops.push_back(OperatorString::one_body(k, q));
    }
    for (int k = 1; k <= m; ++k) {
      for (int s = 1; s <= m; ++s) {
        for (int l = 1; l <= m; ++l) {
          for (int q = 1; q <= m; ++q) ops.push_back(OperatorString::two_body(k, s, l, q));
        }
      }
    }
    for (const auto& op : ops) {
      std::vector<double> expected(space.dimension() * space.dimension(), 0.0);
      Index nonzero = 0;
      for (Index j = 1; j <= space.dimension(); ++j) {
        const auto r = kernel::apply_to_configuration(space, op, Address(j));
        if (r.vanished) continue;
        expected[r.target.offset() * space.dimension() + (j - 1)] = r.prefactor;
        ++nonzero;
      }
      const auto subset = kernel::acted_subset(space, op);
      ASSERT_EQ(subset.size(), nonzero);
      ASSERT_EQ(kernel::acted_subset_size(space, op), nonzero);
      for (const auto& e : subset) {
        ASSERT_EQ(expected[e.out * space.dimension() + e.src], e.prefactor);
      }
    }
  }
}

TEST(Elementary, PrefixPhasesComposeToBetweenCount) {
  for (int m = 2; m <= 12; ++m) {
    for (int n = 1; n < m; ++n) {
      const auto space = SpaceDescriptor::fermions(n, m);
      for_each_configuration(space, [&](const Configuration& c) {
        for (int k = 1; k <= m; ++k) {
          for (int q = 1; q <= m; ++q) {
            if (k == q || c.occupations.n[q - 1] == 0 || c.occupations.n[k - 1] == 1) continue;
            const auto r = kernel::apply_to_configuration(space, OperatorString::one_body(k, q), c.address);
            ASSERT_FALSE(r.vanished);
            const double expected = kernel::fermion_sign_count(c.bits, k, q) % 2 ? -1.0 : 1.0;
            ASSERT_EQ(r.prefactor, expected);
          }
        }
      });
    }
  }
}

TEST(ActedSubset, EachOutputAppearsOnce) {
  const auto space = SpaceDescriptor::bosons(4, 4);
  const auto subset = kernel::acted_subset(space, OperatorString::two_body(1, 2, 2, 3));
  std::vector<int> hits(space.dimension(), 0);
  for (const auto& e : subset) ++hits[e.out];
  for (int h : hits) EXPECT_LE(h, 1);
}

TEST(Apply, NumberOperatorGivesN) {
  for (const auto& space : {SpaceDescriptor::fermions(3, 7), SpaceDescriptor::bosons(5, 3)}) {
    HamiltonianSpec spec(space);
    for (int k = 1; k <= space.orbitals(); ++k) spec.one_body(k, k) = 1.0;
    const auto psi = StateVector::random(space, 9);
    const auto out = kernel::apply_hamiltonian(spec, psi);
    for (Index i = 0; i < psi.size(); ++i) {
      const double n = space.particles();
      EXPECT_NEAR(std::abs(out.amplitudes()[i] - n * psi.amplitudes()[i]), 0.0, 1e-13);
    }
  }
}

TEST(Apply, ZeroSpecGivesZero) {
  const auto space = SpaceDescriptor::fermions(2, 4);
  const auto out = kernel::apply_hamiltonian(HamiltonianSpec(space), StateVector::random(space, 1));
  for (const auto& a : out.amplitudes()) EXPECT_EQ(a, cplx{});
}

TEST(Apply, PairInteractionCountsPairs) {
  // 1/2 sum_ks b†_k b†_s b_s b_k = N(N-1)/2.
  const auto space = SpaceDescriptor::bosons(4, 3);
  HamiltonianSpec spec(space);
  for (int k = 1; k <= 3; ++k) {
    for (int s = 1; s <= 3; ++s) spec.two_body.set(k, s, k, s, 1.0);
  }
  const auto psi = StateVector::random(space, 2);
  const auto out = kernel::apply_hamiltonian(spec, psi);
  for (Index i = 0; i < psi.size(); ++i) {
    EXPECT_NEAR(std::abs(out.amplitudes()[i] - 6.0 * psi.amplitudes()[i]), 0.0, 1e-13);
  }
}

TEST(Apply, MatchesDenseOracle) {
  for (const auto& space : {SpaceDescriptor::fermions(3, 6), SpaceDescriptor::bosons(3, 4),
                            SpaceDescriptor::fermions(1, 3), SpaceDescriptor::bosons(0, 2)}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto spec = testing::random_hermitian_spec(space, 100 + seed);
      const auto dense = oracle::build_dense(spec);
      const auto psi = StateVector::random(space, seed);
      const auto got = kernel::apply_hamiltonian(spec, psi);
      const auto want = dense.apply(psi.amplitudes());
      EXPECT_LE(testing::diff_norm(got.amplitudes(), want), 1e-12 * std::max(1.0, norm(want)));
    }
  }
}

TEST(Apply, LinearAndHermitian) {
  const auto space = SpaceDescriptor::bosons(3, 4);
  const auto spec = testing::random_hermitian_spec(space, 31);
  const auto u = StateVector::random(space, 1);
  const auto v = StateVector::random(space, 2);
  const cplx a(0.4, 1.1);
  const cplx b(-2.0, 0.3);
  auto combo = u;
  combo *= a;
  axpy_inplace(b, v, combo);
  auto lhs = kernel::apply_hamiltonian(spec, combo);
  auto rhs = kernel::apply_hamiltonian(spec, u);
  rhs *= a;
  axpy_inplace(b, kernel::apply_hamiltonian(spec, v), rhs);
  EXPECT_LE(testing::max_abs_diff(lhs.amplitudes(), rhs.amplitudes()), 1e-12);
  const cplx uhv = dot(u, kernel::apply_hamiltonian(spec, v));
  const cplx vhu = dot(v, kernel::apply_hamiltonian(spec, u));
  EXPECT_LE(std::abs(uhv - std::conj(vhu)), 1e-12);
}

TEST(Apply, NonHermitianSpecIsAppliedAsGiven) {
  const auto space = SpaceDescriptor::bosons(2, 3);
  HamiltonianSpec spec(space);
  spec.one_body(1, 3) = cplx(0.0, 2.0);
  spec.two_body.set(1, 2, 3, 3, 0.5);
  const auto psi = StateVector::random(space, 4);
  const auto want = oracle::build_dense(spec).apply(psi.amplitudes());
  EXPECT_LE(testing::diff_norm(kernel::apply_hamiltonian(spec, psi).amplitudes(), want), 1e-13);
}

TEST(ClosedForm, MatchesSequentialConstruction) {
  for (const auto& space : {SpaceDescriptor::fermions(3, 6), SpaceDescriptor::bosons(3, 4)}) {
    const int m = space.orbitals();
    for (Index j = 1; j <= space.dimension(); ++j) {
      const auto psi = StateVector::basis(space, Address(j));
      for (int k = 1; k <= m; ++k) {
        for (int q = 1; q <= m; ++q) {
          if (k == q) continue;
          const auto a = kernel::closed_form::apply_one_body(k, q, psi);
          const auto b = kernel::apply_one_body_term(k, q, psi);
          ASSERT_LE(testing::max_abs_diff(a.amplitudes(), b.amplitudes()), 1e-14);
        }
      }
      for (int k = 1; k <= m; ++k) {
        for (int s = 1; s <= m; ++s) {
          for (int l = 1; l <= m; ++l) {
            for (int q = 1; q <= m; ++q) {
              if (k == s || k == l || k == q || s == l || s == q || l == q) continue;
              const auto a = kernel::closed_form::apply_two_body(k, s, l, q, psi);
              const auto b = kernel::apply_two_body_term(k, s, l, q, psi);
              ASSERT_LE(testing::max_abs_diff(a.amplitudes(), b.amplitudes()), 1e-14);
            }
          }
        }
      }
    }
  }
}

TEST(ClosedForm, RejectsCoincidentIndices) {
  const auto psi = StateVector::random(SpaceDescriptor::fermions(2, 4), 1);
  EXPECT_THROW(kernel::closed_form::apply_one_body(2, 2, psi), ValidationError);
  EXPECT_THROW(kernel::closed_form::apply_two_body(1, 2, 2, 3, psi), ValidationError);
}

TEST(Apply, RejectsBadOrbitals) {
  const auto psi = StateVector::random(SpaceDescriptor::fermions(2, 4), 1);
  EXPECT_THROW(kernel::apply_one_body_term(0, 1, psi), OrbitalRangeError);
  EXPECT_THROW(kernel::apply_two_body_term(1, 2, 3, 5, psi), OrbitalRangeError);
  HamiltonianSpec spec(SpaceDescriptor::fermions(2, 5));
  EXPECT_THROW(kernel::apply_hamiltonian(spec, psi), SpaceMismatch);
}

}  // namespace
}  // namespace fock
