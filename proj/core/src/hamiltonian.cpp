// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/hamiltonian.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "fock/error.hpp"

namespace fock {

namespace {

void check_orbital(int k, int m) {
  if (k < 1 || k > m) {
    throw OrbitalRangeError("orbital " + std::to_string(k) + " outside [1, " + std::to_string(m) +
                            "]");
  }
}

}  // namespace

OneBodyTable::OneBodyTable(int orbitals)
    : m_(orbitals), data_(static_cast<std::size_t>(orbitals) * orbitals) {}

std::size_t OneBodyTable::index(int k, int q) const {
  check_orbital(k, m_);
  check_orbital(q, m_);
  return static_cast<std::size_t>(k - 1) * m_ + (q - 1);
}

TwoBodyTable::TwoBodyTable(int orbitals) : m_(orbitals) {
  if (is_dense()) dense_.assign(static_cast<std::size_t>(orbitals) * orbitals * orbitals * orbitals, 0);
}

std::size_t TwoBodyTable::index(int k, int s, int q, int l) const {
  check_orbital(k, m_);
  check_orbital(s, m_);
  check_orbital(q, m_);
  check_orbital(l, m_);
  const std::size_t m = m_;
  return ((static_cast<std::size_t>(k - 1) * m + (s - 1)) * m + (q - 1)) * m + (l - 1);
}

cplx TwoBodyTable::get(int k, int s, int q, int l) const {
  const auto i = index(k, s, q, l);
  if (is_dense()) return dense_[i];
  const auto it = sparse_.find(i);
  return it == sparse_.end() ? cplx{} : it->second;
}

void TwoBodyTable::set(int k, int s, int q, int l, cplx value) {
  const auto i = index(k, s, q, l);
  if (is_dense()) {
    dense_[i] = value;
  } else if (value == cplx{}) {
    sparse_.erase(i);
  } else {
    sparse_[i] = value;
  }
}

void TwoBodyTable::for_each_nonzero(
    const std::function<void(int, int, int, int, cplx)>& visit) const {
  const std::size_t m = m_;
  auto unpack = [m](std::size_t i, int& k, int& s, int& q, int& l) {
    l = static_cast<int>(i % m) + 1;
    i /= m;
    q = static_cast<int>(i % m) + 1;
    i /= m;
    s = static_cast<int>(i % m) + 1;
    k = static_cast<int>(i / m) + 1;
  };
  int k, s, q, l;
  if (is_dense()) {
    for (std::size_t i = 0; i < dense_.size(); ++i) {
      if (dense_[i] == cplx{}) continue;
      unpack(i, k, s, q, l);
      visit(k, s, q, l, dense_[i]);
    }
  } else {
    for (const auto& [i, w] : sparse_) {
      unpack(i, k, s, q, l);
      visit(k, s, q, l, w);
    }
  }
}

TwoBodyTable TwoBodyTable::symmetrized() const {
  TwoBodyTable out(m_);
  for_each_nonzero([&](int k, int s, int q, int l, cplx w) {
    out.add(k, s, q, l, 0.5 * w);
    out.add(s, k, l, q, 0.5 * w);
  });
  return out;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "one-body hermitian: " << (hermitian_one_body ? "yes" : "no")
     << " (max deviation " << max_one_body_deviation << ")";
  for (const auto& [k, q] : one_body_offenders) os << " h(" << k << "," << q << ")";
  os << "; two-body self-adjoint: " << (self_adjoint_two_body ? "yes" : "no")
     << " (max deviation " << max_two_body_deviation << ")";
  for (const auto& w : two_body_offenders) {
    os << " W(" << w[0] << "," << w[1] << "," << w[2] << "," << w[3] << ")";
  }
  return os.str();
}

ValidationReport validate(const HamiltonianSpec& spec, double tolerance) {
  const int m = spec.space.orbitals();
  if (spec.one_body.orbitals() != m) {
    throw ValidationError("one-body table is " + std::to_string(spec.one_body.orbitals()) +
                          "x" + std::to_string(spec.one_body.orbitals()) + ", space has M = " +
                          std::to_string(m));
  }
  if (spec.two_body.orbitals() != m) {
    throw ValidationError("two-body table has M = " + std::to_string(spec.two_body.orbitals()) +
                          ", space has M = " + std::to_string(m));
  }

  ValidationReport report;
  for (int k = 1; k <= m; ++k) {
    for (int q = k; q <= m; ++q) {
      const double dev = std::abs(spec.one_body(k, q) - std::conj(spec.one_body(q, k)));
      report.max_one_body_deviation = std::max(report.max_one_body_deviation, dev);
      if (dev > tolerance) {
        report.hermitian_one_body = false;
        report.one_body_offenders.push_back({k, q});
      }
    }
  }

  // (W b†_k b†_s b_l b_q)† = conj(W) b†_q b†_l b_s b_k, the (q, l, k, s) slot.
  std::set<std::array<int, 4>> offenders;
  auto check = [&](int k, int s, int q, int l) {
    const double dev =
        std::abs(spec.two_body.get(k, s, q, l) - std::conj(spec.two_body.get(q, l, k, s)));
    report.max_two_body_deviation = std::max(report.max_two_body_deviation, dev);
    if (dev > tolerance) {
      report.self_adjoint_two_body = false;
      offenders.insert(std::min(std::array{k, s, q, l}, std::array{q, l, k, s}));
    }
  };
  spec.two_body.for_each_nonzero([&](int k, int s, int q, int l, cplx) { check(k, s, q, l); });
  report.two_body_offenders.assign(offenders.begin(), offenders.end());
  return report;
}

HamiltonianSpec build_bose_hubbard(int sites, int particles, double hopping, double interaction,
                                   bool ring) {
  if (sites < 1) throw InvalidSpace("Bose-Hubbard chain needs at least one site");
  HamiltonianSpec spec(SpaceDescriptor::bosons(particles, sites));
  for (int k = 1; k < sites; ++k) {
    spec.one_body(k, k + 1) = -hopping;
    spec.one_body(k + 1, k) = -hopping;
  }
  if (ring && sites >= 3) {
    spec.one_body(1, sites) = -hopping;
    spec.one_body(sites, 1) = -hopping;
  }
  if (interaction != 0.0) {
    for (int k = 1; k <= sites; ++k) spec.two_body.set(k, k, k, k, interaction);
  }
  return spec;
}

}  // namespace fock
