// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/mixtures.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "fock/combinadics.hpp"
#include "fock/error.hpp"
#include "fock/executor.hpp"

namespace fock::mixtures {

namespace {

std::string describe(const SpaceDescriptor& s) {
  return std::string(to_string(s.statistics())) + "(N=" + std::to_string(s.particles()) +
         ", M=" + std::to_string(s.orbitals()) + ")";
}

void require_space(const MixtureSpace& x, const MixtureSpace& y, const char* what) {
  if (!(x == y)) {
    throw SpaceMismatch(std::string(what) + ": mixture spaces differ (" + describe(x.a()) + " x " +
                        describe(x.b()) + " vs " + describe(y.a()) + " x " + describe(y.b()) +
                        ")");
  }
}

MixtureStateVector apply_terms(const MixtureSpace& space, const std::vector<MixtureTerm>& terms,
                               const MixtureStateVector& psi) {
  require_space(space, psi.space(), "mixture apply");
  std::vector<double> weights(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) weights[t] = term_weight(space, terms[t]);
  const auto partition = executor::make_partition(weights, 1);
  return MixtureStateVector(
      space, executor::grouped_apply(partition, psi.amplitudes(), space.dimension(),
                                     [&](std::size_t t, std::span<const cplx> x,
                                         std::span<cplx> y) {
                                       accumulate_term(space, terms[t], x, y);
                                     }));
}

void check_orbital(int k, int m) {
  if (k < 1 || k > m) {
    throw OrbitalRangeError("orbital " + std::to_string(k) + " outside [1, " + std::to_string(m) +
                            "]");
  }
}

}  // namespace

__extension__ typedef unsigned __int128 Wide;

MixtureSpace::MixtureSpace(SpaceDescriptor a, SpaceDescriptor b) : a_(a), b_(b) {
  const Wide d = static_cast<Wide>(a.dimension()) * b.dimension();
  if (d > static_cast<Wide>(~Index{0})) {
    throw OverflowError("mixture dimension exceeds 64 bits");
  }
  dimension_ = static_cast<Index>(d);
}

Address mixture_address(Address ja, Address jb, const MixtureSpace& space) {
  combinadics::validate(ja, space.a());
  combinadics::validate(jb, space.b());
  return Address::from_offset(ja.offset() * space.b().dimension() + jb.offset());
}

std::pair<Address, Address> mixture_components(Address j, const MixtureSpace& space) {
  if (j.value < 1 || j.value > space.dimension()) {
    throw AddressError("mixture address " + std::to_string(j.value) + " outside [1, " +
                       std::to_string(space.dimension()) + "]");
  }
  const Index nb = space.b().dimension();
  return {Address::from_offset(j.offset() / nb), Address::from_offset(j.offset() % nb)};
}

MixtureStateVector::MixtureStateVector(MixtureSpace space)
    : space_(space), amplitudes_(space.dimension(), cplx{}) {}

MixtureStateVector::MixtureStateVector(MixtureSpace space, std::vector<cplx> amplitudes)
    : space_(space), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.dimension()) {
    throw SpaceMismatch("amplitude count " + std::to_string(amplitudes_.size()) +
                        " does not match mixture dimension " + std::to_string(space_.dimension()));
  }
}

MixtureStateVector MixtureStateVector::basis(const MixtureSpace& space, Address ja, Address jb) {
  MixtureStateVector v(space);
  v.amplitudes_[mixture_address(ja, jb, space).offset()] = 1.0;
  return v;
}

MixtureStateVector MixtureStateVector::random(const MixtureSpace& space, std::uint64_t seed) {
  MixtureStateVector v(space);
  Rng rng(seed);
  for (auto& a : v.amplitudes_) a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  const double n = v.norm();
  if (n > 0) {
    for (auto& a : v.amplitudes_) a /= n;
  }
  return v;
}

MixtureStateVector MixtureStateVector::product(const StateVector& a, const StateVector& b) {
  MixtureStateVector v(MixtureSpace(a.space(), b.space()));
  const Index nb = b.size();
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = 0; j < nb; ++j) v.amplitudes_[i * nb + j] = a.amplitudes()[i] * b.amplitudes()[j];
  }
  return v;
}

cplx& MixtureStateVector::operator()(Address ja, Address jb) {
  return amplitudes_[mixture_address(ja, jb, space_).offset()];
}

const cplx& MixtureStateVector::operator()(Address ja, Address jb) const {
  return amplitudes_[mixture_address(ja, jb, space_).offset()];
}

double MixtureStateVector::norm() const { return fock::norm(amplitudes_); }

cplx dot(const MixtureStateVector& u, const MixtureStateVector& v) {
  require_space(u.space(), v.space(), "dot");
  return fock::dot(u.amplitudes(), v.amplitudes());
}

InterSpeciesTable::InterSpeciesTable(int orbitals_a, int orbitals_b)
    : ma_(orbitals_a),
      mb_(orbitals_b),
      data_(static_cast<std::size_t>(orbitals_a) * orbitals_b * orbitals_a * orbitals_b) {}

std::size_t InterSpeciesTable::index(int k, int kp, int q, int qp) const {
  check_orbital(k, ma_);
  check_orbital(q, ma_);
  check_orbital(kp, mb_);
  check_orbital(qp, mb_);
  const std::size_t a = ma_;
  const std::size_t b = mb_;
  return ((static_cast<std::size_t>(k - 1) * b + (kp - 1)) * a + (q - 1)) * b + (qp - 1);
}

std::string MixtureValidationReport::summary() const {
  std::ostringstream os;
  os << "A: " << a.summary() << "\nB: " << b.summary()
     << "\ninter-species hermitian: " << (hermitian_inter_species ? "yes" : "no")
     << " (max deviation " << max_inter_species_deviation << ")";
  for (const auto& w : inter_species_offenders) {
    os << " X(" << w[0] << "," << w[1] << "," << w[2] << "," << w[3] << ")";
  }
  return os.str();
}

MixtureValidationReport validate(const MixtureHamiltonian& h, double tolerance) {
  if (!(h.a.space == h.space.a()) || !(h.b.space == h.space.b())) {
    throw ValidationError("species Hamiltonians do not match the mixture space");
  }
  if (h.ab.orbitals_a() != h.space.a().orbitals() || h.ab.orbitals_b() != h.space.b().orbitals()) {
    throw ValidationError("inter-species table does not match the mixture space");
  }
  MixtureValidationReport report;
  report.a = validate(h.a, tolerance);
  report.b = validate(h.b, tolerance);
  const int ma = h.ab.orbitals_a();
  const int mb = h.ab.orbitals_b();
  std::set<std::array<int, 4>> offenders;
  for (int k = 1; k <= ma; ++k) {
    for (int kp = 1; kp <= mb; ++kp) {
      for (int q = 1; q <= ma; ++q) {
        for (int qp = 1; qp <= mb; ++qp) {
          const double dev = std::abs(h.ab(k, kp, q, qp) - std::conj(h.ab(q, qp, k, kp)));
          report.max_inter_species_deviation = std::max(report.max_inter_species_deviation, dev);
          if (dev > tolerance) {
            report.hermitian_inter_species = false;
            offenders.insert(std::min(std::array{k, kp, q, qp}, std::array{q, qp, k, kp}));
          }
        }
      }
    }
  }
  report.inter_species_offenders.assign(offenders.begin(), offenders.end());
  return report;
}

std::vector<MixtureTerm> mixture_terms(const MixtureHamiltonian& h,
                                       const kernel::ApplyOptions& options) {
  std::vector<MixtureTerm> terms;
  for (const auto& t : kernel::hamiltonian_terms(h.a, options)) {
    terms.push_back({Part::IntraA, t.op, {}, t.coefficient});
  }
  for (const auto& t : kernel::hamiltonian_terms(h.b, options)) {
    terms.push_back({Part::IntraB, {}, t.op, t.coefficient});
  }
  const int ma = h.ab.orbitals_a();
  const int mb = h.ab.orbitals_b();
  for (int k = 1; k <= ma; ++k) {
    for (int kp = 1; kp <= mb; ++kp) {
      for (int q = 1; q <= ma; ++q) {
        for (int qp = 1; qp <= mb; ++qp) {
          const cplx w = h.ab(k, kp, q, qp);
          if (std::abs(w) > options.skip_threshold) {
            terms.push_back({Part::Inter, kernel::OperatorString::one_body(k, q),
                             kernel::OperatorString::one_body(kp, qp), w});
          }
        }
      }
    }
  }
  return terms;
}

double term_weight(const MixtureSpace& space, const MixtureTerm& term) {
  const double na = static_cast<double>(space.a().dimension());
  const double nb = static_cast<double>(space.b().dimension());
  switch (term.part) {
    case Part::IntraA:
      return static_cast<double>(kernel::acted_subset_size(space.a(), term.a)) * nb + 1.0;
    case Part::IntraB:
      return static_cast<double>(kernel::acted_subset_size(space.b(), term.b)) * na + 1.0;
    case Part::Inter:
      return static_cast<double>(kernel::acted_subset_size(space.a(), term.a)) *
                 static_cast<double>(kernel::acted_subset_size(space.b(), term.b)) +
             1.0;
  }
  return 1.0;
}

void accumulate_term(const MixtureSpace& space, const MixtureTerm& term, std::span<const cplx> in,
                     std::span<cplx> out) {
  const Index na = space.a().dimension();
  const Index nb = space.b().dimension();
  const cplx c = term.coefficient;
  switch (term.part) {
    case Part::IntraA: {
      for (const auto& r : kernel::acted_subset(space.a(), term.a)) {
        const cplx f = c * r.prefactor;
        const cplx* x = in.data() + r.src * nb;
        cplx* y = out.data() + r.out * nb;
        for (Index jb = 0; jb < nb; ++jb) y[jb] += f * x[jb];
      }
      break;
    }
    case Part::IntraB: {
      for (const auto& r : kernel::acted_subset(space.b(), term.b)) {
        const cplx f = c * r.prefactor;
        for (Index ja = 0; ja < na; ++ja) out[ja * nb + r.out] += f * in[ja * nb + r.src];
      }
      break;
    }
    case Part::Inter: {
      const auto sa = kernel::acted_subset(space.a(), term.a);
      const auto sb = kernel::acted_subset(space.b(), term.b);
      for (const auto& ra : sa) {
        const cplx fa = c * ra.prefactor;
        const cplx* x = in.data() + ra.src * nb;
        cplx* y = out.data() + ra.out * nb;
        for (const auto& rb : sb) y[rb.out] += fa * rb.prefactor * x[rb.src];
      }
      break;
    }
  }
}

MixtureStateVector apply_intra_a(const kernel::OperatorString& op, const MixtureStateVector& psi) {
  return apply_terms(psi.space(), {{Part::IntraA, op, {}, 1.0}}, psi);
}

MixtureStateVector apply_intra_a(const HamiltonianSpec& h, const MixtureStateVector& psi,
                                 const kernel::ApplyOptions& options) {
  require_same_space(h.space, psi.space().a(), "apply_intra_a");
  std::vector<MixtureTerm> terms;
  for (const auto& t : kernel::hamiltonian_terms(h, options)) {
    terms.push_back({Part::IntraA, t.op, {}, t.coefficient});
  }
  return apply_terms(psi.space(), terms, psi);
}

MixtureStateVector apply_intra_b(const kernel::OperatorString& op, const MixtureStateVector& psi) {
  return apply_terms(psi.space(), {{Part::IntraB, {}, op, 1.0}}, psi);
}

MixtureStateVector apply_intra_b(const HamiltonianSpec& h, const MixtureStateVector& psi,
                                 const kernel::ApplyOptions& options) {
  require_same_space(h.space, psi.space().b(), "apply_intra_b");
  std::vector<MixtureTerm> terms;
  for (const auto& t : kernel::hamiltonian_terms(h, options)) {
    terms.push_back({Part::IntraB, {}, t.op, t.coefficient});
  }
  return apply_terms(psi.space(), terms, psi);
}

MixtureStateVector apply_inter_term(int k, int kp, int q, int qp, const MixtureStateVector& psi) {
  return apply_terms(psi.space(),
                     {{Part::Inter, kernel::OperatorString::one_body(k, q),
                       kernel::OperatorString::one_body(kp, qp), 1.0}},
                     psi);
}

MixtureStateVector apply_inter(const InterSpeciesTable& w, const MixtureStateVector& psi,
                               const kernel::ApplyOptions& options) {
  if (w.orbitals_a() != psi.space().a().orbitals() ||
      w.orbitals_b() != psi.space().b().orbitals()) {
    throw ValidationError("inter-species table does not match the mixture space");
  }
  MixtureHamiltonian h(psi.space());
  h.ab = w;
  return apply_terms(psi.space(), mixture_terms(h, options), psi);
}

MixtureStateVector apply_mixture_hamiltonian(const MixtureHamiltonian& h,
                                             const MixtureStateVector& psi,
                                             const kernel::ApplyOptions& options) {
  return apply_terms(h.space, mixture_terms(h, options), psi);
}

}  // namespace fock::mixtures
