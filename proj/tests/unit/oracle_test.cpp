// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "fock/error.hpp"
#include "fock/oracle.hpp"
#include "random_models.hpp"

namespace fock {
namespace {

TEST(Symbolic, FermionPhases) {
  const std::vector<std::pair<int, bool>> hop = {{3, false}, {1, true}};
  const auto r = oracle::apply_symbolic(Statistics::Fermion, {0, 1, 1, 0}, hop);
  ASSERT_FALSE(r.vanished);
  EXPECT_EQ(r.occupations, (std::vector<int>{1, 1, 0, 0}));
  EXPECT_EQ(r.factor, -1.0);
  const std::vector<std::pair<int, bool>> blocked = {{3, false}, {2, true}};
  EXPECT_TRUE(oracle::apply_symbolic(Statistics::Fermion, {0, 1, 1, 0}, blocked).vanished);
}

TEST(Symbolic, BosonFactors) {
  const std::vector<std::pair<int, bool>> ops = {{2, false}, {2, false}, {1, true}};
  const auto r = oracle::apply_symbolic(Statistics::Boson, {1, 2}, ops);
  EXPECT_EQ(r.occupations, (std::vector<int>{2, 0}));
  EXPECT_NEAR(r.factor, std::sqrt(2.0) * 1.0 * std::sqrt(2.0), 1e-15);
}

TEST(Dense, FermionHoppingCommutator) {
  // [c†_1 c_2, c†_2 c_1] = n_1 - n_2.
  const auto space = SpaceDescriptor::fermions(2, 4);
  const auto a = oracle::build_one_body_term(space, 1, 2).matrix;
  const auto b = oracle::build_one_body_term(space, 2, 1).matrix;
  const auto n1 = oracle::build_one_body_term(space, 1, 1).matrix;
  const auto n2 = oracle::build_one_body_term(space, 2, 2).matrix;
  const Eigen::MatrixXcd comm = a * b - b * a;
  EXPECT_LE((comm - (n1 - n2)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Dense, BosonCommutator) {
  const auto space = SpaceDescriptor::bosons(3, 3);
  const auto a = oracle::build_one_body_term(space, 1, 3).matrix;
  const auto b = oracle::build_one_body_term(space, 3, 1).matrix;
  const auto n1 = oracle::build_one_body_term(space, 1, 1).matrix;
  const auto n3 = oracle::build_one_body_term(space, 3, 3).matrix;
  EXPECT_LE(((a * b - b * a) - (n1 - n3)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Dense, TwoBodyTermFactorizes) {
  // Bosons: b†_k b†_s b_l b_q = b†_k b_q b†_s b_l - delta_sq b†_k b_l.
  const auto space = SpaceDescriptor::bosons(3, 3);
  const auto lhs = oracle::build_two_body_term(space, 1, 2, 3, 2).matrix;
  const auto rhs = (oracle::build_one_body_term(space, 1, 2).matrix *
                    oracle::build_one_body_term(space, 2, 3).matrix -
                    oracle::build_one_body_term(space, 1, 3).matrix)
                       .eval();
  EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Dense, EigAndExpm) {
  const auto spec = testing::random_hermitian_spec(SpaceDescriptor::fermions(2, 4), 1);
  const auto op = oracle::build_dense(spec);
  EXPECT_TRUE(op.is_hermitian(1e-13));
  const auto sp = oracle::dense_eig(op);
  EXPECT_TRUE(std::is_sorted(sp.values.data(), sp.values.data() + sp.values.size()));
  const auto psi = StateVector::random(spec.space, 2);
  const auto out = oracle::dense_expm_apply(sp, psi.amplitudes(), 3.0);
  EXPECT_NEAR(norm(out), 1.0, 1e-12);
  const auto back = oracle::dense_expm_apply(sp, out, -3.0);
  EXPECT_LE(testing::max_abs_diff(back, psi.amplitudes()), 1e-12);
}

TEST(Dense, RejectsNonHermitianAndOversized) {
  HamiltonianSpec spec(SpaceDescriptor::bosons(2, 2));
  spec.one_body(1, 2) = 1.0;
  EXPECT_THROW(oracle::dense_eig(oracle::build_dense(spec)), ValidationError);
  EXPECT_THROW(oracle::build_dense(HamiltonianSpec(SpaceDescriptor::bosons(8, 8)), 1000), SizeError);
}

}  // namespace
}  // namespace fock
