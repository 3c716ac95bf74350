// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fock/types.hpp"

/// Deterministic term-parallel evaluation.
///
/// Terms are dealt into a fixed number of groups that does not depend on the
/// worker count. Each group is accumulated serially in ascending term order
/// into a private vector, and the group vectors are combined by a fixed
/// binary tree keyed on group id. Workers only decide who computes which
/// group, so the result is bitwise identical for any worker count and any
/// scheduling.
namespace fock::executor {

/// Number of term groups (and leaves of the reduction tree).
inline constexpr std::size_t kReductionGroups = 16;

/// Static assignment of terms to groups and of groups to workers.
struct TermPartition {
  /// Term ids per group, ascending.
  std::vector<std::vector<std::size_t>> groups;
  std::size_t workers = 1;

  /// Groups owned by worker w: g with g % workers == w.
  std::vector<std::size_t> groups_of(std::size_t worker) const;
  std::size_t term_count() const;
};

/// Balances groups by estimated cost (largest first onto the lightest group,
/// ties broken by term id and group id).
TermPartition make_partition(std::span<const double> weights, std::size_t workers);

/// Adds the contribution of `term` (read from `in`) into `out`.
using TermAccumulator =
    std::function<void(std::size_t term, std::span<const cplx> in, std::span<cplx> out)>;

/// Sum of all terms' contributions, evaluated per the partition.
std::vector<cplx> grouped_apply(const TermPartition& partition, std::span<const cplx> in,
                                std::size_t out_size, const TermAccumulator& accumulate);

/// Runs task(i) for i in [0, n) with static round-robin assignment to workers.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& task);

/// Worker count: the flag if given, else FOCK_WORKERS, else 1.
std::size_t resolve_workers(std::optional<std::size_t> flag);

}  // namespace fock::executor
