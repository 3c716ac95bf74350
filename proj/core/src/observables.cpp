// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/observables.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <Eigen/Dense>

#include "fock/error.hpp"
#include "fock/kernel.hpp"

namespace fock::observables {

namespace {

nlohmann::json complex_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

OneBodyDensity::OneBodyDensity(int orbitals)
    : m_(orbitals), data_(static_cast<std::size_t>(orbitals) * orbitals) {}

cplx OneBodyDensity::trace() const {
  cplx t{};
  for (int k = 1; k <= m_; ++k) t += (*this)(k, k);
  return t;
}

double OneBodyDensity::hermiticity_error() const {
  double e = 0.0;
  for (int k = 1; k <= m_; ++k) {
    for (int q = 1; q <= m_; ++q) e = std::max(e, std::abs((*this)(k, q) - std::conj((*this)(q, k))));
  }
  return e;
}

std::vector<double> OneBodyDensity::natural_occupations() const {
  Eigen::MatrixXcd rho(m_, m_);
  for (int k = 1; k <= m_; ++k) {
    for (int q = 1; q <= m_; ++q) {
      rho(k - 1, q - 1) = 0.5 * ((*this)(k, q) + std::conj((*this)(q, k)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + m_);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

TwoBodyDensity::TwoBodyDensity(int orbitals)
    : m_(orbitals),
      data_(static_cast<std::size_t>(orbitals) * orbitals * orbitals * orbitals) {}

cplx TwoBodyDensity::pair_trace() const {
  cplx t{};
  for (int k = 1; k <= m_; ++k) {
    for (int s = 1; s <= m_; ++s) t += (*this)(k, s, s, k);
  }
  return t;
}

cplx TwoBodyDensity::partial_trace(int k, int q) const {
  cplx t{};
  for (int s = 1; s <= m_; ++s) t += (*this)(k, s, s, q);
  return t;
}

cplx one_body_element(const StateVector& psi, int k, int q) {
  return dot(psi, kernel::apply_one_body_term(k, q, psi));
}

cplx two_body_element(const StateVector& psi, int k, int s, int l, int q) {
  return dot(psi, kernel::apply_two_body_term(k, s, l, q, psi));
}

OneBodyDensity one_body_density(const StateVector& psi) {
  const int m = psi.space().orbitals();
  OneBodyDensity rho(m);
  for (int k = 1; k <= m; ++k) {
    for (int q = 1; q <= m; ++q) rho(k, q) = one_body_element(psi, k, q);
  }
  return rho;
}

TwoBodyDensity two_body_density(const StateVector& psi) {
  const int m = psi.space().orbitals();
  TwoBodyDensity rho(m);
  for (int k = 1; k <= m; ++k) {
    for (int s = 1; s <= m; ++s) {
      for (int l = 1; l <= m; ++l) {
        for (int q = 1; q <= m; ++q) rho(k, s, l, q) = two_body_element(psi, k, s, l, q);
      }
    }
  }
  return rho;
}

cplx energy(const HamiltonianSpec& spec, const StateVector& psi) {
  return dot(psi, kernel::apply_hamiltonian(spec, psi));
}

cplx energy(const mixtures::MixtureHamiltonian& h, const mixtures::MixtureStateVector& psi) {
  return dot(psi, mixtures::apply_mixture_hamiltonian(h, psi));
}

std::pair<OneBodyDensity, OneBodyDensity> mixture_densities(
    const mixtures::MixtureStateVector& psi) {
  const int ma = psi.space().a().orbitals();
  const int mb = psi.space().b().orbitals();
  OneBodyDensity a(ma);
  OneBodyDensity b(mb);
  for (int k = 1; k <= ma; ++k) {
    for (int q = 1; q <= ma; ++q) {
      a(k, q) = dot(psi, mixtures::apply_intra_a(kernel::OperatorString::one_body(k, q), psi));
    }
  }
  for (int k = 1; k <= mb; ++k) {
    for (int q = 1; q <= mb; ++q) {
      b(k, q) = dot(psi, mixtures::apply_intra_b(kernel::OperatorString::one_body(k, q), psi));
    }
  }
  return {std::move(a), std::move(b)};
}

nlohmann::json to_json(const OneBodyDensity& rho) {
  const int m = rho.orbitals();
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 1; k <= m; ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (int q = 1; q <= m; ++q) row.push_back(complex_json(rho(k, q)));
    rows.push_back(std::move(row));
  }
  return {{"orbitals", m},
          {"rho", std::move(rows)},
          {"trace", complex_json(rho.trace())},
          {"natural_occupations", rho.natural_occupations()}};
}

nlohmann::json to_json(const TwoBodyDensity& rho) {
  const int m = rho.orbitals();
  nlohmann::json out = {{"orbitals", m}, {"order", "k,s,l,q"}};
  if (m <= 8) {
    nlohmann::json dense = nlohmann::json::array();
    for (int k = 1; k <= m; ++k) {
      nlohmann::json ks = nlohmann::json::array();
      for (int s = 1; s <= m; ++s) {
        nlohmann::json ls = nlohmann::json::array();
        for (int l = 1; l <= m; ++l) {
          nlohmann::json qs = nlohmann::json::array();
          for (int q = 1; q <= m; ++q) qs.push_back(complex_json(rho(k, s, l, q)));
          ls.push_back(std::move(qs));
        }
        ks.push_back(std::move(ls));
      }
      dense.push_back(std::move(ks));
    }
    out["format"] = "dense";
    out["rho"] = std::move(dense);
    return out;
  }
  nlohmann::json entries = nlohmann::json::array();
  for (int k = 1; k <= m; ++k) {
    for (int s = 1; s <= m; ++s) {
      for (int l = 1; l <= m; ++l) {
        for (int q = 1; q <= m; ++q) {
          const cplx v = rho(k, s, l, q);
          if (std::abs(v) > 1e-14) entries.push_back({k, s, l, q, v.real(), v.imag()});
        }
      }
    }
  }
  out["format"] = "coo";
  out["entries"] = std::move(entries);
  return out;
}

std::string to_csv(const OneBodyDensity& rho) {
  std::ostringstream os;
  os.precision(17);
  os << "k,q,re,im\n";
  for (int k = 1; k <= rho.orbitals(); ++k) {
    for (int q = 1; q <= rho.orbitals(); ++q) {
      os << k << ',' << q << ',' << rho(k, q).real() << ',' << rho(k, q).imag() << '\n';
    }
  }
  return os.str();
}

}  // namespace fock::observables
