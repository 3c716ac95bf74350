// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/binomial.hpp"

#include <limits>
#include <string>

#include "fock/error.hpp"

namespace fock {

namespace {
constexpr Index kSaturated = std::numeric_limits<Index>::max();
}

BinomialTable::BinomialTable(int a_max, int b_max) : a_max_(a_max), b_max_(b_max) {
  if (a_max < 0 || b_max < 0) throw InvalidSpace("binomial table bounds must be non-negative");
  const std::size_t width = static_cast<std::size_t>(b_max) + 1;
  table_.assign((static_cast<std::size_t>(a_max) + 1) * width, 0);
  for (int a = 0; a <= a_max; ++a) {
    table_[a * width] = 1;
    for (int b = 1; b <= b_max && b <= a; ++b) {
      const Index left = table_[(a - 1) * width + (b - 1)];
      const Index up = b <= a - 1 ? table_[(a - 1) * width + b] : 0;
      Index sum;
      if (left == kSaturated || up == kSaturated || __builtin_add_overflow(left, up, &sum)) {
        sum = kSaturated;
      }
      table_[a * width + b] = sum;
    }
  }
}

bool BinomialTable::overflowed(int a, int b) const {
  return (*this)(a, b) == kSaturated;
}

Index BinomialTable::checked(int a, int b) const {
  if (a > a_max_ || b > b_max_) {
    throw OverflowError("C(" + std::to_string(a) + "," + std::to_string(b) +
                        ") outside the binomial table");
  }
  const Index v = (*this)(a, b);
  if (v == kSaturated) {
    throw OverflowError("C(" + std::to_string(a) + "," + std::to_string(b) +
                        ") exceeds 64-bit index width");
  }
  return v;
}

__extension__ typedef unsigned __int128 Wide;

Index binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  // Multiplicative form with exact division at each step, in 128-bit.
  Wide result = 1;
  for (int i = 1; i <= b; ++i) {
    result = result * static_cast<unsigned>(a - b + i) / static_cast<unsigned>(i);
    if (result > std::numeric_limits<Index>::max()) {
      throw OverflowError("C(" + std::to_string(a) + "," + std::to_string(b) +
                          ") exceeds 64-bit index width");
    }
  }
  return static_cast<Index>(result);
}

}  // namespace fock
