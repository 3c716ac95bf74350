// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "fock/types.hpp"

namespace fock {

/// Pascal-triangle table of C(a, b) for 0 <= a <= a_max, 0 <= b <= b_max.
///
/// Entries that exceed the 64-bit index width are stored saturated and
/// reported by `overflowed`; `checked` throws on them. Addressing only ever
/// reads entries bounded by the space dimension, which the owning space
/// verifies at construction.
class BinomialTable {
 public:
  BinomialTable() = default;
  BinomialTable(int a_max, int b_max);

  int a_max() const noexcept { return a_max_; }
  int b_max() const noexcept { return b_max_; }

  /// C(a, b); zero for b > a or negative arguments. Unchecked for saturation.
  Index operator()(int a, int b) const noexcept {
    if (a < 0 || b < 0 || b > a) return 0;
    return table_[static_cast<std::size_t>(a) * (b_max_ + 1) + b];
  }

  bool overflowed(int a, int b) const;

  /// C(a, b), throwing OverflowError if the value is saturated.
  Index checked(int a, int b) const;

 private:
  int a_max_ = -1;
  int b_max_ = -1;
  std::vector<Index> table_;
};

/// Exact C(a, b) computed on demand; throws OverflowError past 64 bits.
Index binomial(int a, int b);

}  // namespace fock
