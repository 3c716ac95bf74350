// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/kernel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "fock/combinadics.hpp"
#include "fock/error.hpp"
#include "fock/executor.hpp"

namespace fock::kernel {

namespace {

constexpr FermionBits bit(int p) { return FermionBits{1} << (p - 1); }

void check_op(const SpaceDescriptor& space, const OperatorString& op) {
  if (op.rank < 1 || op.rank > kMaxBody) throw ValidationError("operator rank must be 1 or 2");
  const int m = space.orbitals();
  for (int i = 0; i < op.rank; ++i) {
    for (int p : {op.creators[i], op.annihilators[i]}) {
      if (p < 1 || p > m) {
        throw OrbitalRangeError("orbital " + std::to_string(p) + " outside [1, " +
                                std::to_string(m) + "]");
      }
    }
  }
}

// Sequential application on a fermionic bit-set. Returns false if the string vanishes.
bool apply_fermion(const OperatorString& op, FermionBits& bits, double& factor) {
  int parity = 0;
  for (int i = 0; i < op.rank; ++i) {
    const int p = op.annihilators[i];
    if (!(bits & bit(p))) return false;
    parity += std::popcount(bits & (bit(p) - 1));
    bits &= ~bit(p);
  }
  for (int i = op.rank - 1; i >= 0; --i) {
    const int p = op.creators[i];
    if (bits & bit(p)) return false;
    parity += std::popcount(bits & (bit(p) - 1));
    bits |= bit(p);
  }
  factor = (parity & 1) ? -1.0 : 1.0;
  return true;
}

bool apply_boson(const OperatorString& op, std::span<int> n, double& factor) {
  // Counts multiply exactly; one square root keeps number operators integral.
  std::uint64_t counts = 1;
  for (int i = 0; i < op.rank; ++i) {
    int& np = n[op.annihilators[i] - 1];
    if (np == 0) return false;
    counts *= static_cast<std::uint64_t>(np);
    --np;
  }
  for (int i = op.rank - 1; i >= 0; --i) {
    int& np = n[op.creators[i] - 1];
    ++np;
    counts *= static_cast<std::uint64_t>(np);
  }
  factor = std::sqrt(static_cast<double>(counts));
  return true;
}

bool has_duplicate(std::span<const int> v) {
  return v.size() == 2 && v[0] == v[1];
}

// Calls visit(out_offset, src_offset, prefactor) for every nonzero of op.
template <class Visit>
void for_each_acted(const SpaceDescriptor& space, const OperatorString& op, Visit&& visit) {
  check_op(space, op);
  const int n = space.particles();
  const int m = space.orbitals();
  const int spectators = n - op.rank;
  if (spectators < 0) return;

  if (space.is_fermionic()) {
    if (has_duplicate(op.created()) || has_duplicate(op.annihilated())) return;
    FermionBits touched = 0;
    FermionBits created = 0;
    FermionBits annihilated = 0;
    for (int p : op.created()) created |= bit(p);
    for (int p : op.annihilated()) annihilated |= bit(p);
    touched = created | annihilated;
    std::vector<int> free;
    for (int p = 1; p <= m; ++p) {
      if (!(touched & bit(p))) free.push_back(p);
    }
    const int l = static_cast<int>(free.size());
    if (spectators > l) return;
    std::vector<int> idx(spectators);
    for (int i = 0; i < spectators; ++i) idx[i] = i;
    while (true) {
      FermionBits r = 0;
      for (int i : idx) r |= bit(free[i]);
      FermionBits target = r | annihilated;
      const Index src = combinadics::rank_bits(target, space);
      double factor = 0.0;
      if (apply_fermion(op, target, factor)) {
        visit(combinadics::rank_bits(target, space), src, factor);
      }
      int i = spectators - 1;
      while (i >= 0 && idx[i] == l - spectators + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < spectators; ++j) idx[j] = idx[j - 1] + 1;
    }
    return;
  }

  // Bosons: spectators are any configuration of N - rank particles.
  std::vector<int> r(m, 0);
  r[0] = spectators;
  std::vector<int> work(m);
  while (true) {
    std::copy(r.begin(), r.end(), work.begin());
    for (int p : op.annihilated()) ++work[p - 1];
    const Index src = combinadics::rank_occupations(work, space);
    double factor = 0.0;
    if (apply_boson(op, work, factor)) {
      visit(combinadics::rank_occupations(work, space), src, factor);
    }
    // Successor in increasing address order.
    int j = m - 2;
    while (j >= 0 && r[j] == 0) --j;
    if (j < 0) break;
    --r[j];
    int tail = 1;
    for (int i = j + 1; i < m; ++i) {
      tail += r[i];
      r[i] = 0;
    }
    r[j + 1] = tail;
  }
}

}  // namespace

OperatorString OperatorString::one_body(int k, int q) {
  OperatorString op;
  op.creators = {k, 0};
  op.annihilators = {q, 0};
  op.rank = 1;
  return op;
}

OperatorString OperatorString::two_body(int k, int s, int l, int q) {
  OperatorString op;
  op.creators = {k, s};
  op.annihilators = {q, l};
  op.rank = 2;
  return op;
}

int fermion_sign_count(FermionBits config, int k, int q) {
  const int lo = std::min(k, q);
  const int hi = std::max(k, q);
  if (hi - lo < 2) return 0;
  const FermionBits between = (bit(hi) - 1) & ~((bit(lo) << 1) - 1);
  return std::popcount(config & between);
}

ElementaryResult apply_to_configuration(const SpaceDescriptor& space, const OperatorString& op,
                                        Address source) {
  check_op(space, op);
  combinadics::validate(source, space);
  ElementaryResult result;
  OccupationVector occ = combinadics::unrank(source, space);
  double factor = 0.0;
  if (space.is_fermionic()) {
    FermionBits bits = combinadics::bits_from_occupations(occ);
    if (!apply_fermion(op, bits, factor)) return result;
    result.target = Address::from_offset(combinadics::rank_bits(bits, space));
  } else {
    if (!apply_boson(op, occ.n, factor)) return result;
    result.target = Address::from_offset(combinadics::rank_occupations(occ.n, space));
  }
  result.prefactor = factor;
  result.vanished = false;
  return result;
}

std::vector<Readdress> acted_subset(const SpaceDescriptor& space, const OperatorString& op) {
  std::vector<Readdress> out;
  out.reserve(acted_subset_size(space, op));
  for_each_acted(space, op, [&](Index o, Index s, double f) { out.push_back({o, s, f}); });
  return out;
}

Index acted_subset_size(const SpaceDescriptor& space, const OperatorString& op) {
  check_op(space, op);
  const int spectators = space.particles() - op.rank;
  if (spectators < 0) return 0;
  if (space.is_fermionic()) {
    if (has_duplicate(op.created()) || has_duplicate(op.annihilated())) return 0;
    FermionBits touched = 0;
    for (int p : op.created()) touched |= bit(p);
    for (int p : op.annihilated()) touched |= bit(p);
    const int free = space.orbitals() - std::popcount(touched);
    return binomial(free, spectators);
  }
  return binomial(spectators + space.orbitals() - 1, spectators);
}

void gather(std::span<const Readdress> subset, cplx coefficient, std::span<const cplx> in,
            std::span<cplx> out) {
  for (const auto& r : subset) out[r.out] += coefficient * r.prefactor * in[r.src];
}

void accumulate_term(const SpaceDescriptor& space, const Term& term, std::span<const cplx> in,
                     std::span<cplx> out) {
  const cplx c = term.coefficient;
  for_each_acted(space, term.op,
                 [&](Index o, Index s, double f) { out[o] += c * f * in[s]; });
}

double term_weight(const SpaceDescriptor& space, const Term& term) {
  return static_cast<double>(acted_subset_size(space, term.op)) + 1.0;
}

std::vector<cplx> apply_terms(const SpaceDescriptor& space, std::span<const Term> terms,
                              std::span<const cplx> in, std::size_t workers) {
  if (in.size() != space.dimension()) throw SpaceMismatch("input length does not match N_conf");
  std::vector<double> weights(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) weights[t] = term_weight(space, terms[t]);
  const auto partition = executor::make_partition(weights, workers);
  return executor::grouped_apply(
      partition, in, space.dimension(),
      [&](std::size_t t, std::span<const cplx> x, std::span<cplx> y) {
        accumulate_term(space, terms[t], x, y);
      });
}

StateVector apply_string(const OperatorString& op, const StateVector& psi) {
  StateVector out(psi.space());
  for_each_acted(psi.space(), op, [&](Index o, Index s, double f) {
    out.amplitudes()[o] += f * psi.amplitudes()[s];
  });
  return out;
}

StateVector apply_one_body_term(int k, int q, const StateVector& psi) {
  return apply_string(OperatorString::one_body(k, q), psi);
}

StateVector apply_two_body_term(int k, int s, int l, int q, const StateVector& psi) {
  return apply_string(OperatorString::two_body(k, s, l, q), psi);
}

std::vector<Term> hamiltonian_terms(const HamiltonianSpec& spec, const ApplyOptions& options) {
  const int m = spec.space.orbitals();
  if (spec.one_body.orbitals() != m || spec.two_body.orbitals() != m) {
    throw ValidationError("integral tables do not match the space orbital count");
  }
  std::vector<Term> terms;
  for (int k = 1; k <= m; ++k) {
    for (int q = 1; q <= m; ++q) {
      const cplx h = spec.one_body(k, q);
      if (std::abs(h) > options.skip_threshold) terms.push_back({OperatorString::one_body(k, q), h});
    }
  }
  spec.two_body.for_each_nonzero([&](int k, int s, int q, int l, cplx w) {
    const cplx c = 0.5 * w;
    if (std::abs(c) > options.skip_threshold) {
      terms.push_back({OperatorString::two_body(k, s, l, q), c});
    }
  });
  return terms;
}

StateVector apply_hamiltonian(const HamiltonianSpec& spec, const StateVector& psi,
                              const ApplyOptions& options) {
  require_same_space(spec.space, psi.space(), "apply_hamiltonian");
  const auto terms = hamiltonian_terms(spec, options);
  return StateVector(psi.space(), apply_terms(psi.space(), terms, psi.amplitudes(), 1));
}

StateVector apply_one_body_operator(const OneBodyTable& h, const StateVector& psi,
                                    const ApplyOptions& options) {
  const int m = psi.space().orbitals();
  if (h.orbitals() != m) throw ValidationError("one-body table does not match the space");
  std::vector<Term> terms;
  for (int k = 1; k <= m; ++k) {
    for (int q = 1; q <= m; ++q) {
      if (std::abs(h(k, q)) > options.skip_threshold) {
        terms.push_back({OperatorString::one_body(k, q), h(k, q)});
      }
    }
  }
  return StateVector(psi.space(), apply_terms(psi.space(), terms, psi.amplitudes(), 1));
}

namespace closed_form {

namespace {

void require_distinct(std::initializer_list<int> idx, int m) {
  std::vector<int> v(idx);
  for (int p : v) {
    if (p < 1 || p > m) throw OrbitalRangeError("orbital " + std::to_string(p) + " out of range");
  }
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw ValidationError("closed-form application requires distinct orbitals");
  }
}

}  // namespace

StateVector apply_one_body(int k, int q, const StateVector& psi) {
  const SpaceDescriptor& space = psi.space();
  require_distinct({k, q}, space.orbitals());
  StateVector out(space);
  auto in = psi.amplitudes();
  auto y = out.amplitudes();
  for_each_configuration(space, [&](const Configuration& c) {
    const Index j = c.address.offset();
    if (space.is_fermionic()) {
      const FermionBits b = c.bits;
      if (!(b & bit(k)) || (b & bit(q))) return;
      const FermionBits src = b ^ bit(k) ^ bit(q);
      const double sign = (fermion_sign_count(b, k, q) & 1) ? -1.0 : 1.0;
      y[j] = sign * in[combinadics::rank_bits(src, space)];
    } else {
      const auto& n = c.occupations.n;
      if (n[k - 1] == 0) return;
      std::vector<int> src = n;
      --src[k - 1];
      ++src[q - 1];
      const double f = std::sqrt(static_cast<double>(n[k - 1]) * (n[q - 1] + 1));
      y[j] = f * in[combinadics::rank_occupations(src, space)];
    }
  });
  return out;
}

StateVector apply_two_body(int k, int s, int l, int q, const StateVector& psi) {
  const SpaceDescriptor& space = psi.space();
  require_distinct({k, s, l, q}, space.orbitals());
  StateVector out(space);
  auto in = psi.amplitudes();
  auto y = out.amplitudes();
  for_each_configuration(space, [&](const Configuration& c) {
    const Index j = c.address.offset();
    if (space.is_fermionic()) {
      const FermionBits b = c.bits;
      if (!(b & bit(k)) || !(b & bit(s)) || (b & bit(l)) || (b & bit(q))) return;
      const FermionBits b_sl = b ^ bit(s) ^ bit(l);
      const FermionBits src = b_sl ^ bit(k) ^ bit(q);
      const int d = fermion_sign_count(b_sl, k, q) + fermion_sign_count(b, s, l);
      y[j] = ((d & 1) ? -1.0 : 1.0) * in[combinadics::rank_bits(src, space)];
    } else {
      const auto& n = c.occupations.n;
      if (n[k - 1] == 0 || n[s - 1] == 0) return;
      std::vector<int> src = n;
      --src[k - 1];
      --src[s - 1];
      ++src[l - 1];
      ++src[q - 1];
      const double f = std::sqrt(static_cast<double>(n[k - 1]) * n[s - 1] * (n[l - 1] + 1) *
                                 (n[q - 1] + 1));
      y[j] = f * in[combinadics::rank_occupations(src, space)];
    }
  });
  return out;
}

}  // namespace closed_form

}  // namespace fock::kernel
