// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "fock/combinadics.hpp"
#include "fock/error.hpp"
#include "fock/fockspace.hpp"
#include "fock/vector_io.hpp"

namespace fock {
namespace {

TEST(Iteration, VisitsEveryAddressInOrder) {
  for (const auto& space : {SpaceDescriptor::fermions(3, 7), SpaceDescriptor::bosons(4, 4),
                            SpaceDescriptor::bosons(0, 3), SpaceDescriptor::fermions(5, 5)}) {
    Index expected = 1;
    for_each_configuration(space, [&](const Configuration& c) {
      ASSERT_EQ(c.address.value, expected);
      ASSERT_EQ(combinadics::rank(c.occupations, space).value, expected);
      if (space.is_fermionic()) {
        ASSERT_EQ(combinadics::fermion_rank(c.holes, space).value, expected);
      }
      ++expected;
    });
    EXPECT_EQ(expected - 1, space.dimension());
  }
}

TEST(StateVector, BasisAndNorm) {
  const auto space = SpaceDescriptor::bosons(2, 3);
  auto v = StateVector::basis(space, Address(4));
  EXPECT_EQ(v.size(), 6u);
  EXPECT_EQ(v[Address(4)], cplx(1.0));
  EXPECT_DOUBLE_EQ(v.norm(), 1.0);
  EXPECT_THROW(StateVector::basis(space, Address(7)), AddressError);
  EXPECT_THROW(v.at(Address(0)), AddressError);
  EXPECT_THROW(StateVector(space, std::vector<cplx>(5)), SpaceMismatch);
}

TEST(StateVector, RandomIsReproducibleAndNormalized) {
  const auto space = SpaceDescriptor::fermions(3, 8);
  const auto a = StateVector::random(space, 42);
  const auto b = StateVector::random(space, 42);
  const auto c = StateVector::random(space, 43);
  EXPECT_NEAR(a.norm(), 1.0, 1e-14);
  EXPECT_TRUE(std::equal(a.amplitudes().begin(), a.amplitudes().end(), b.amplitudes().begin()));
  EXPECT_NE(a.amplitudes()[0], c.amplitudes()[0]);
}

TEST(LinearAlgebra, DotIsConjugateLinear) {
  const auto space = SpaceDescriptor::fermions(2, 5);
  const auto u = StateVector::random(space, 1);
  const auto v = StateVector::random(space, 2);
  const cplx s(0.3, -1.7);
  auto sv = v;
  sv *= s;
  EXPECT_LT(std::abs(dot(u, sv) - s * dot(u, v)), 1e-14);
  auto su = u;
  su *= s;
  EXPECT_LT(std::abs(dot(su, v) - std::conj(s) * dot(u, v)), 1e-14);
  EXPECT_LT(std::abs(dot(u, v) - std::conj(dot(v, u))), 1e-15);
  const auto w = axpy(s, u, v);
  for (Index i = 0; i < w.size(); ++i) {
    EXPECT_EQ(w.amplitudes()[i], v.amplitudes()[i] + s * u.amplitudes()[i]);
  }
  EXPECT_THROW(dot(u, StateVector::random(SpaceDescriptor::bosons(2, 5), 1)), SpaceMismatch);
}

TEST(VectorIo, BinaryRoundTripIsExact) {
  const auto v = StateVector::random(SpaceDescriptor::bosons(3, 4), 7);
  std::stringstream buffer;
  io::write_vector(buffer, v);
  EXPECT_EQ(buffer.str().size(), 33u + 16u * v.size());
  EXPECT_EQ(buffer.str().substr(0, 8), "FOCKVEC1");
  const auto w = io::read_vector(buffer);
  EXPECT_EQ(w.space(), v.space());
  EXPECT_TRUE(std::equal(v.amplitudes().begin(), v.amplitudes().end(), w.amplitudes().begin()));
}

TEST(VectorIo, HeaderIsLittleEndian) {
  const auto v = StateVector::basis(SpaceDescriptor::fermions(2, 4), Address(1));
  std::stringstream buffer;
  io::write_vector(buffer, v);
  const std::string s = buffer.str();
  EXPECT_EQ(s[8], 0);
  EXPECT_EQ(s[9], 2);
  EXPECT_EQ(s[17], 4);
  EXPECT_EQ(s[25], 6);
}

TEST(VectorIo, RejectsCorruptInput) {
  std::stringstream bad("NOTAVEC1........");
  EXPECT_THROW(io::read_vector(bad), ParseError);

  const auto v = StateVector::random(SpaceDescriptor::fermions(2, 4), 3);
  std::stringstream buffer;
  io::write_vector(buffer, v);
  std::string truncated = buffer.str();
  truncated.resize(truncated.size() - 5);
  std::stringstream t(truncated);
  EXPECT_THROW(io::read_vector(t), ParseError);

  std::string wrong_dim = buffer.str();
  wrong_dim[25] = 7;
  std::stringstream w(wrong_dim);
  EXPECT_THROW(io::read_vector(w), ParseError);
}

TEST(VectorIo, JsonRoundTripIsExact) {
  const auto v = StateVector::random(SpaceDescriptor::fermions(3, 6), 11);
  const auto j = io::vector_to_json(v);
  EXPECT_EQ(j.at("format"), "fockvec-json-1");
  const auto w = io::vector_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_TRUE(std::equal(v.amplitudes().begin(), v.amplitudes().end(), w.amplitudes().begin()));
}

TEST(Rng, UniformRange) {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace fock
