// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/executor.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <string>
#include <string_view>
#include <thread>

#include "fock/error.hpp"

namespace fock::executor {

std::vector<std::size_t> TermPartition::groups_of(std::size_t worker) const {
  std::vector<std::size_t> out;
  for (std::size_t g = worker; g < groups.size(); g += workers) out.push_back(g);
  return out;
}

std::size_t TermPartition::term_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

TermPartition make_partition(std::span<const double> weights, std::size_t workers) {
  TermPartition p;
  p.workers = std::max<std::size_t>(1, workers);
  p.groups.resize(kReductionGroups);

  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });

  std::vector<double> load(kReductionGroups, 0.0);
  for (std::size_t t : order) {
    const auto g = static_cast<std::size_t>(std::min_element(load.begin(), load.end()) - load.begin());
    load[g] += weights[t];
    p.groups[g].push_back(t);
  }
  for (auto& g : p.groups) std::sort(g.begin(), g.end());
  return p;
}

void parallel_for(std::size_t n, std::size_t workers,
                  const std::function<void(std::size_t)>& task) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += workers) task(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<cplx> grouped_apply(const TermPartition& partition, std::span<const cplx> in,
                                std::size_t out_size, const TermAccumulator& accumulate) {
  const std::size_t groups = partition.groups.size();
  std::vector<std::vector<cplx>> partial(groups);

  parallel_for(partition.workers, partition.workers, [&](std::size_t w) {
    for (std::size_t g : partition.groups_of(w)) {
      if (partition.groups[g].empty()) continue;
      partial[g].assign(out_size, cplx{});
      for (std::size_t t : partition.groups[g]) accumulate(t, in, partial[g]);
    }
  });

  // Fixed pairwise tree over group ids; empty groups contribute exact zeros.
  for (std::size_t stride = 1; stride < groups; stride *= 2) {
    for (std::size_t g = 0; g + stride < groups; g += 2 * stride) {
      auto& lhs = partial[g];
      const auto& rhs = partial[g + stride];
      if (rhs.empty()) continue;
      if (lhs.empty()) {
        lhs = rhs;
        continue;
      }
      for (std::size_t i = 0; i < out_size; ++i) lhs[i] += rhs[i];
    }
  }
  if (groups == 0 || partial[0].empty()) return std::vector<cplx>(out_size, cplx{});
  return std::move(partial[0]);
}

std::size_t resolve_workers(std::optional<std::size_t> flag) {
  if (flag) {
    if (*flag == 0) throw ValidationError("worker count must be at least 1");
    return *flag;
  }
  if (const char* env = std::getenv("FOCK_WORKERS")) {
    const std::string_view s(env);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0) {
      throw ValidationError("FOCK_WORKERS must be a positive integer, got '" + std::string(s) +
                            "'");
    }
    return value;
  }
  return 1;
}

}  // namespace fock::executor
