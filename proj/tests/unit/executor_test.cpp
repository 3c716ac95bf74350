// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "fock/error.hpp"
#include "fock/executor.hpp"
#include "fock/parallel.hpp"
#include "random_models.hpp"

namespace fock {
namespace {

bool bitwise_equal(std::span<const cplx> a, std::span<const cplx> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size_bytes()) == 0;
}

TEST(Partition, CoversEveryTermOnce) {
  std::vector<double> weights;
  for (int i = 0; i < 100; ++i) weights.push_back((i * 37) % 11 + 1);
  const auto p = executor::make_partition(weights, 3);
  EXPECT_EQ(p.groups.size(), executor::kReductionGroups);
  EXPECT_EQ(p.term_count(), weights.size());
  std::vector<int> seen(weights.size(), 0);
  for (const auto& g : p.groups) {
    EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
    for (auto t : g) ++seen[t];
  }
  for (int s : seen) EXPECT_EQ(s, 1);
}

TEST(Partition, GroupsIndependentOfWorkers) {
  std::vector<double> weights = {5, 1, 9, 3, 3, 7, 2, 8, 8, 1, 4};
  const auto a = executor::make_partition(weights, 1);
  for (std::size_t w : {2, 3, 4, 8, 16, 32}) {
    EXPECT_EQ(executor::make_partition(weights, w).groups, a.groups);
  }
}

TEST(Partition, WorkerOwnership) {
  const auto p = executor::make_partition(std::vector<double>(40, 1.0), 4);
  std::vector<int> owner(executor::kReductionGroups, 0);
  for (std::size_t w = 0; w < 4; ++w) {
    for (auto g : p.groups_of(w)) {
      EXPECT_EQ(g % 4, w);
      ++owner[g];
    }
  }
  for (int o : owner) EXPECT_EQ(o, 1);
}

TEST(ParallelFor, RunsEachIndexOnceAndPropagatesErrors) {
  std::vector<std::atomic<int>> hits(57);
  executor::parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(executor::parallel_for(10, 3,
                                      [](std::size_t i) {
                                        if (i == 7) throw std::runtime_error("boom");
                                      }),
               std::runtime_error);
}

TEST(ParallelApply, BitwiseIdenticalAcrossWorkerCounts) {
  for (const auto& space : {SpaceDescriptor::fermions(3, 6), SpaceDescriptor::bosons(4, 4)}) {
    const auto spec = testing::random_hermitian_spec(space, 17);
    const auto psi = StateVector::random(space, 5);
    const auto serial = kernel::apply_hamiltonian(spec, psi);
    for (std::size_t w : {1, 2, 3, 4, 8}) {
      const auto par = executor::parallel_apply(spec, psi, w);
      EXPECT_TRUE(bitwise_equal(serial.amplitudes(), par.amplitudes())) << "workers " << w;
    }
  }
}

TEST(ParallelApply, MixtureBitwiseIdentical) {
  const mixtures::MixtureSpace space(SpaceDescriptor::fermions(2, 3), SpaceDescriptor::bosons(2, 3));
  const auto h = testing::random_hermitian_mixture(space, 3);
  const auto psi = mixtures::MixtureStateVector::random(space, 8);
  const auto serial = mixtures::apply_mixture_hamiltonian(h, psi);
  for (std::size_t w : {2, 4, 8}) {
    EXPECT_TRUE(bitwise_equal(serial.amplitudes(), executor::parallel_apply(h, psi, w).amplitudes()));
  }
}

TEST(ParallelDensities, MatchSerial) {
  const auto space = SpaceDescriptor::fermions(2, 4);
  const auto spec = testing::random_hermitian_spec(space, 2);
  const auto psi = StateVector::random(space, 3);
  const auto one = executor::parallel_densities(spec, psi, 1);
  const auto four = executor::parallel_densities(spec, psi, 4);
  EXPECT_EQ(one.one_body, four.one_body);
  EXPECT_EQ(one.two_body, four.two_body);
  EXPECT_EQ(one.energy, four.energy);
  EXPECT_EQ(one.one_body, observables::one_body_density(psi));
}

TEST(DensityAssignment, CoversAllElements) {
  const auto a = executor::density_assignment(3, 4);
  std::size_t total = 0;
  for (const auto& w : a) total += w.size();
  EXPECT_EQ(total, 9u + 81u);
}

TEST(ResolveWorkers, FlagThenEnvironmentThenOne) {
  ::unsetenv("FOCK_WORKERS");
  EXPECT_EQ(executor::resolve_workers(std::nullopt), 1u);
  ::setenv("FOCK_WORKERS", "6", 1);
  EXPECT_EQ(executor::resolve_workers(std::nullopt), 6u);
  EXPECT_EQ(executor::resolve_workers(3), 3u);
  ::setenv("FOCK_WORKERS", "many", 1);
  EXPECT_THROW(executor::resolve_workers(std::nullopt), ValidationError);
  ::unsetenv("FOCK_WORKERS");
  EXPECT_THROW(executor::resolve_workers(0), ValidationError);
}

}  // namespace
}  // namespace fock
