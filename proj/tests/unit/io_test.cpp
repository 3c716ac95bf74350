// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "fock/error.hpp"
#include "fock/integral_io.hpp"
#include "random_models.hpp"

namespace fock {
namespace {

TEST(Integrals, ParsesDocumentedFormat) {
  std::istringstream in(R"(# two-site model
STATISTICS BOSON
N 3
M 2
H 1 2 -1.0
H 2 1 -1.0   # hopping back
W 1 1 1 1 2.5
W 1 2 2 1 0.5 -0.25
W 1 2 2 1 0.5
)");
  const auto spec = io::parse_integrals(in);
  EXPECT_EQ(spec.space, SpaceDescriptor::bosons(3, 2));
  EXPECT_EQ(spec.one_body(1, 2), cplx(-1.0));
  EXPECT_EQ(spec.one_body(1, 1), cplx{});
  EXPECT_EQ(spec.two_body.get(1, 1, 1, 1), cplx(2.5));
  EXPECT_EQ(spec.two_body.get(1, 2, 2, 1), cplx(1.0, -0.25));
}

TEST(Integrals, RoundTripIsExact) {
  const auto spec = testing::random_hermitian_spec(SpaceDescriptor::fermions(2, 4), 3);
  std::stringstream buffer;
  io::write_integrals(buffer, spec);
  const auto back = io::parse_integrals(buffer);
  for (int k = 1; k <= 4; ++k) {
    for (int q = 1; q <= 4; ++q) EXPECT_EQ(back.one_body(k, q), spec.one_body(k, q));
  }
  spec.two_body.for_each_nonzero(
      [&](int k, int s, int q, int l, cplx w) { EXPECT_EQ(back.two_body.get(k, s, q, l), w); });
}

void expect_parse_error(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  try {
    io::parse_model(in);
    FAIL() << "expected ParseError for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
  }
}

TEST(Integrals, ErrorsCarryLineNumbers) {
  expect_parse_error("N 2\n", 1);
  expect_parse_error("STATISTICS ANYON\nN 2\nM 3\n", 1);
  expect_parse_error("STATISTICS FERMION\nM 3\nX 2\n", 3);
  expect_parse_error("STATISTICS FERMION\nN 2\nM 3\nH 1 4 1.0\n", 4);
  expect_parse_error("STATISTICS FERMION\nN 2\nM 3\nH 1 2 abc\n", 4);
  expect_parse_error("STATISTICS FERMION\nN 2\nM 3\n\n# c\nW 1 2 3 1.0 2.0 3.0\n", 6);
  expect_parse_error("STATISTICS FERMION\nN 2\nM 3\nQ 1 2 1.0\n", 4);
  expect_parse_error("STATISTICS FERMION\nN 4\nM 3\n", 3);
}

TEST(Integrals, MixtureFormat) {
  std::istringstream in(R"(STATISTICS MIX FERMION BOSON
NA 1
MA 2
NB 2
MB 2
HA 1 2 -1
HA 2 1 -1
HB 1 1 0.5
WB 1 1 1 1 1.0
X 1 2 2 1 0.3 0.1
X 2 1 1 2 0.3 -0.1
)");
  const auto model = io::parse_model(in);
  ASSERT_TRUE(std::holds_alternative<mixtures::MixtureHamiltonian>(model));
  const auto& h = std::get<mixtures::MixtureHamiltonian>(model);
  EXPECT_EQ(h.space.a(), SpaceDescriptor::fermions(1, 2));
  EXPECT_EQ(h.space.b(), SpaceDescriptor::bosons(2, 2));
  EXPECT_EQ(h.a.one_body(1, 2), cplx(-1.0));
  EXPECT_EQ(h.b.two_body.get(1, 1, 1, 1), cplx(1.0));
  // X k q k' q' stores W(k, k', q, q').
  EXPECT_EQ(h.ab(1, 2, 2, 1), cplx(0.3, 0.1));
  EXPECT_TRUE(mixtures::validate(h).hermitian());

  std::stringstream buffer;
  io::write_integrals(buffer, h);
  const auto back = std::get<mixtures::MixtureHamiltonian>(io::parse_model(buffer));
  EXPECT_EQ(back.ab(1, 2, 2, 1), h.ab(1, 2, 2, 1));
  EXPECT_EQ(back.ab(2, 1, 1, 2), h.ab(2, 1, 1, 2));
}

TEST(Integrals, SingleSpeciesLoaderRejectsMixture) {
  std::istringstream in("STATISTICS MIX BOSON BOSON\nNA 1\nMA 1\nNB 1\nMB 1\n");
  EXPECT_THROW(io::parse_integrals(in), ParseError);
}

TEST(MixtureVector, RoundTrip) {
  const mixtures::MixtureSpace space(SpaceDescriptor::fermions(1, 3), SpaceDescriptor::bosons(2, 2));
  const auto v = mixtures::MixtureStateVector::random(space, 4);
  std::stringstream buffer;
  io::write_mixture_vector(buffer, v);
  EXPECT_EQ(buffer.str().substr(0, 8), "FOCKMIX1");
  const auto w = io::read_mixture_vector(buffer);
  EXPECT_EQ(w.space(), space);
  EXPECT_TRUE(std::equal(v.amplitudes().begin(), v.amplitudes().end(), w.amplitudes().begin()));
}

}  // namespace
}  // namespace fock
