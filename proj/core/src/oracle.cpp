// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/oracle.hpp"

#include <cmath>
#include <map>
#include <string>

#include "fock/combinadics.hpp"
#include "fock/error.hpp"

namespace fock::oracle {

namespace {

using Op = std::pair<int, bool>;

struct Basis {
  std::vector<std::vector<int>> configs;
  std::map<std::vector<int>, Eigen::Index> lookup;
};

Basis enumerate(const SpaceDescriptor& space, std::size_t cap) {
  if (space.dimension() > cap) {
    throw SizeError("dense oracle limited to " + std::to_string(cap) + " configurations, space has " +
                    std::to_string(space.dimension()));
  }
  Basis b;
  const auto n = static_cast<Eigen::Index>(space.dimension());
  b.configs.reserve(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    b.configs.push_back(combinadics::unrank(Address::from_offset(j), space).n);
    b.lookup.emplace(b.configs.back(), j);
  }
  return b;
}

void add_string(const SpaceDescriptor& space, const Basis& basis, std::span<const Op> ops,
                cplx coefficient, Eigen::MatrixXcd& m) {
  for (std::size_t j = 0; j < basis.configs.size(); ++j) {
    const auto r = apply_symbolic(space.statistics(), basis.configs[j], ops);
    if (r.vanished) continue;
    const auto it = basis.lookup.find(r.occupations);
    if (it == basis.lookup.end()) throw InvalidConfiguration("oracle: target outside the space");
    m(it->second, static_cast<Eigen::Index>(j)) += coefficient * r.factor;
  }
}

std::array<Op, 2> one_body_ops(int k, int q) { return {Op{q, false}, Op{k, true}}; }

std::array<Op, 4> two_body_ops(int k, int s, int l, int q) {
  return {Op{q, false}, Op{l, false}, Op{s, true}, Op{k, true}};
}

void check_orbitals(const SpaceDescriptor& space, std::initializer_list<int> idx) {
  for (int p : idx) {
    if (p < 1 || p > space.orbitals()) {
      throw OrbitalRangeError("orbital " + std::to_string(p) + " outside [1, " +
                              std::to_string(space.orbitals()) + "]");
    }
  }
}

Eigen::MatrixXcd dense_species(const HamiltonianSpec& spec, std::size_t cap) {
  const Basis basis = enumerate(spec.space, cap);
  const auto n = static_cast<Eigen::Index>(basis.configs.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const int orbitals = spec.space.orbitals();
  for (int k = 1; k <= orbitals; ++k) {
    for (int q = 1; q <= orbitals; ++q) {
      const cplx h = spec.one_body(k, q);
      if (h != cplx{}) add_string(spec.space, basis, one_body_ops(k, q), h, m);
    }
  }
  spec.two_body.for_each_nonzero([&](int k, int s, int q, int l, cplx w) {
    add_string(spec.space, basis, two_body_ops(k, s, l, q), 0.5 * w, m);
  });
  return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

bool DenseOperator::is_hermitian(double tolerance) const {
  if (matrix.rows() != matrix.cols()) return false;
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

std::vector<cplx> DenseOperator::apply(std::span<const cplx> psi) const {
  if (static_cast<Eigen::Index>(psi.size()) != matrix.cols()) {
    throw SizeError("dense apply: vector length does not match the operator");
  }
  const Eigen::Map<const Eigen::VectorXcd> x(psi.data(), matrix.cols());
  const Eigen::VectorXcd y = matrix * x;
  return {y.data(), y.data() + y.size()};
}

SymbolicResult apply_symbolic(Statistics statistics, std::vector<int> occupations,
                              std::span<const std::pair<int, bool>> ops) {
  SymbolicResult r;
  double factor = 1.0;
  for (const auto& [p, create] : ops) {
    if (p < 1 || p > static_cast<int>(occupations.size())) {
      throw OrbitalRangeError("orbital " + std::to_string(p) + " out of range");
    }
    int& n = occupations[p - 1];
    if (statistics == Statistics::Fermion) {
      int below = 0;
      for (int i = 0; i < p - 1; ++i) below += occupations[i];
      if (create ? n != 0 : n != 1) return r;
      if (below % 2) factor = -factor;
      n = create ? 1 : 0;
    } else {
      if (create) {
        factor *= std::sqrt(static_cast<double>(n + 1));
        ++n;
      } else {
        if (n == 0) return r;
        factor *= std::sqrt(static_cast<double>(n));
        --n;
      }
    }
  }
  r.occupations = std::move(occupations);
  r.factor = factor;
  r.vanished = false;
  return r;
}

DenseOperator build_one_body_term(const SpaceDescriptor& space, int k, int q, std::size_t cap) {
  check_orbitals(space, {k, q});
  const Basis basis = enumerate(space, cap);
  const auto n = static_cast<Eigen::Index>(basis.configs.size());
  DenseOperator op{Eigen::MatrixXcd::Zero(n, n)};
  add_string(space, basis, one_body_ops(k, q), 1.0, op.matrix);
  return op;
}

DenseOperator build_two_body_term(const SpaceDescriptor& space, int k, int s, int l, int q,
                                  std::size_t cap) {
  check_orbitals(space, {k, s, l, q});
  const Basis basis = enumerate(space, cap);
  const auto n = static_cast<Eigen::Index>(basis.configs.size());
  DenseOperator op{Eigen::MatrixXcd::Zero(n, n)};
  add_string(space, basis, two_body_ops(k, s, l, q), 1.0, op.matrix);
  return op;
}

DenseOperator build_dense(const HamiltonianSpec& spec, std::size_t cap) {
  if (spec.one_body.orbitals() != spec.space.orbitals() ||
      spec.two_body.orbitals() != spec.space.orbitals()) {
    throw ValidationError("integral tables do not match the space orbital count");
  }
  return {dense_species(spec, cap)};
}

DenseOperator build_dense(const mixtures::MixtureHamiltonian& h, std::size_t cap) {
  if (h.space.dimension() > cap) {
    throw SizeError("dense oracle limited to " + std::to_string(cap) + " configurations, space has " +
                    std::to_string(h.space.dimension()));
  }
  const SpaceDescriptor& sa = h.space.a();
  const SpaceDescriptor& sb = h.space.b();
  const Eigen::MatrixXcd ha = dense_species(h.a, cap);
  const Eigen::MatrixXcd hb = dense_species(h.b, cap);
  const auto na = ha.rows();
  const auto nb = hb.rows();
  Eigen::MatrixXcd m = kron(ha, Eigen::MatrixXcd::Identity(nb, nb)) +
                       kron(Eigen::MatrixXcd::Identity(na, na), hb);

  const Basis basis_a = enumerate(sa, cap);
  const Basis basis_b = enumerate(sb, cap);
  std::vector<Eigen::MatrixXcd> xa(static_cast<std::size_t>(sa.orbitals()) * sa.orbitals());
  std::vector<Eigen::MatrixXcd> xb(static_cast<std::size_t>(sb.orbitals()) * sb.orbitals());
  auto one_body = [](const SpaceDescriptor& s, const Basis& basis, std::vector<Eigen::MatrixXcd>& cache,
                     int k, int q) -> const Eigen::MatrixXcd& {
    auto& e = cache[static_cast<std::size_t>(k - 1) * s.orbitals() + (q - 1)];
    if (e.size() == 0) {
      const auto n = static_cast<Eigen::Index>(basis.configs.size());
      e = Eigen::MatrixXcd::Zero(n, n);
      add_string(s, basis, one_body_ops(k, q), 1.0, e);
    }
    return e;
  };
  for (int k = 1; k <= sa.orbitals(); ++k) {
    for (int kp = 1; kp <= sb.orbitals(); ++kp) {
      for (int q = 1; q <= sa.orbitals(); ++q) {
        for (int qp = 1; qp <= sb.orbitals(); ++qp) {
          const cplx w = h.ab(k, kp, q, qp);
          if (w == cplx{}) continue;
          m += w * kron(one_body(sa, basis_a, xa, k, q), one_body(sb, basis_b, xb, kp, qp));
        }
      }
    }
  }
  return {std::move(m)};
}

DenseSpectrum dense_eig(const DenseOperator& op) {
  const double scale = std::max(1.0, op.matrix.cwiseAbs().maxCoeff());
  if (!op.is_hermitian(1e-10 * scale)) throw ValidationError("dense_eig: operator is not Hermitian");
  const Eigen::MatrixXcd h = 0.5 * (op.matrix + op.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw ValidationError("dense_eig: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<cplx> dense_expm_apply(const DenseSpectrum& spectrum, std::span<const cplx> psi,
                                   double t) {
  if (static_cast<Eigen::Index>(psi.size()) != spectrum.vectors.rows()) {
    throw SizeError("dense_expm_apply: vector length does not match the operator");
  }
  const Eigen::Map<const Eigen::VectorXcd> x(psi.data(), spectrum.vectors.rows());
  Eigen::VectorXcd c = spectrum.vectors.adjoint() * x;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    c(i) *= std::exp(cplx(0.0, -spectrum.values(i) * t));
  }
  const Eigen::VectorXcd y = spectrum.vectors * c;
  return {y.data(), y.data() + y.size()};
}

std::vector<cplx> dense_expm_apply(const DenseOperator& op, std::span<const cplx> psi, double t) {
  return dense_expm_apply(dense_eig(op), psi, t);
}

}  // namespace fock::oracle
