// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>

#include "fock/error.hpp"
#include "fock/executor.hpp"
#include "fock/kernel.hpp"
#include "fock/mixtures.hpp"
#include "fock/observables.hpp"

namespace fock::solvers {

namespace {

using Vec = std::vector<cplx>;

void scale(Vec& v, double s) {
  for (auto& x : v) x *= s;
}

// v <- v - sum_i <b_i, v> b_i, applied twice.
void orthogonalize(Vec& v, const std::vector<Vec>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const cplx c = dot(b, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
  }
}

Vec random_start(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Vec v(n);
  for (auto& x : v) x = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  scale(v, 1.0 / norm(v));
  return v;
}

Vec combine(const std::vector<Vec>& basis, std::span<const double> coeffs, std::size_t n) {
  Vec x(n, cplx{});
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) x[i] += coeffs[j] * basis[j][i];
  }
  return x;
}

double residual_norm(const LinearMap& h, const Vec& x, double theta, Vec& hx) {
  h.apply(x, hx);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(hx[i] - theta * x[i]);
  return std::sqrt(s);
}

void require_hermitian(const HamiltonianSpec& spec) {
  const auto report = validate(spec);
  if (!report.hermitian()) throw ValidationError("Hamiltonian is not Hermitian: " + report.summary());
}

void require_hermitian(const mixtures::MixtureHamiltonian& h) {
  const auto report = mixtures::validate(h);
  if (!report.hermitian()) throw ValidationError("Hamiltonian is not Hermitian: " + report.summary());
}

}  // namespace

LinearMap make_map(const HamiltonianSpec& spec, std::size_t workers) {
  auto terms = std::make_shared<std::vector<kernel::Term>>(kernel::hamiltonian_terms(spec));
  const SpaceDescriptor space = spec.space;
  LinearMap map;
  map.dimension = space.dimension();
  map.apply = [terms, space, workers](std::span<const cplx> x, std::span<cplx> y) {
    const auto r = kernel::apply_terms(space, *terms, x, workers);
    std::copy(r.begin(), r.end(), y.begin());
  };
  return map;
}

LinearMap make_map(const mixtures::MixtureHamiltonian& h, std::size_t workers) {
  auto terms = std::make_shared<std::vector<mixtures::MixtureTerm>>(mixtures::mixture_terms(h));
  const mixtures::MixtureSpace space = h.space;
  std::vector<double> weights(terms->size());
  for (std::size_t t = 0; t < terms->size(); ++t) {
    weights[t] = mixtures::term_weight(space, (*terms)[t]);
  }
  auto partition = std::make_shared<executor::TermPartition>(executor::make_partition(weights, workers));
  LinearMap map;
  map.dimension = space.dimension();
  map.apply = [terms, space, partition](std::span<const cplx> x, std::span<cplx> y) {
    const auto r = executor::grouped_apply(
        *partition, x, space.dimension(),
        [&](std::size_t t, std::span<const cplx> in, std::span<cplx> out) {
          mixtures::accumulate_term(space, (*terms)[t], in, out);
        });
    std::copy(r.begin(), r.end(), y.begin());
  };
  return map;
}

TridiagonalEigen tridiagonal_eigen(std::span<const double> diagonal,
                                   std::span<const double> off_diagonal) {
  const int n = static_cast<int>(diagonal.size());
  if (n == 0) return {};
  if (static_cast<int>(off_diagonal.size()) < n - 1) {
    throw SizeError("tridiagonal_eigen: off-diagonal too short");
  }
  std::vector<double> d(diagonal.begin(), diagonal.end());
  std::vector<double> e(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = off_diagonal[i];
  std::vector<double> z(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto zat = [&](int row, int col) -> double& { return z[static_cast<std::size_t>(col) * n + row]; };

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (++iter > 100) throw ConvergenceError("tridiagonal QL did not converge", std::abs(e[l]));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = zat(k, i + 1);
            zat(k, i + 1) = s * zat(k, i) + c * f;
            zat(k, i) = c * zat(k, i) - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  TridiagonalEigen out;
  out.values.resize(n);
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = d[order[j]];
    std::copy_n(z.begin() + static_cast<std::ptrdiff_t>(order[j]) * n, n,
                out.vectors.begin() + static_cast<std::ptrdiff_t>(j) * n);
  }
  return out;
}

EigenPair lanczos_ground_state(const LinearMap& h, const LanczosOptions& options) {
  const std::size_t n = h.dimension;
  if (n == 0) throw SizeError("lanczos: empty operator");
  const int max_basis = static_cast<int>(
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(2, options.restart_dimension))));

  Vec start = random_start(n, options.seed);
  Vec w(n);
  Vec hx(n);
  int applications = 0;
  double best_residual = std::numeric_limits<double>::infinity();

  while (true) {
    std::vector<Vec> basis;
    std::vector<double> alpha;
    std::vector<double> beta;
    basis.push_back(start);
    Vec ritz;
    double theta = 0.0;
    bool converged_estimate = false;

    for (int j = 0; j < max_basis; ++j) {
      if (applications >= options.max_iterations) break;
      h.apply(basis[j], w);
      ++applications;
      alpha.push_back(dot(basis[j], w).real());
      orthogonalize(w, basis);
      const double b = norm(w);
      const int dim = j + 1;
      const bool breakdown = b <= 1e-13 * std::max(1.0, std::abs(alpha.back()));
      const bool last = dim == max_basis || breakdown || applications >= options.max_iterations;
      if (dim < 12 || dim % 5 == 0 || last) {
        const auto te = tridiagonal_eigen(alpha, beta);
        const double estimate = breakdown ? 0.0 : b * std::abs(te.vectors[dim - 1]);
        if (estimate <= 0.1 * options.tolerance || last) {
          theta = te.values[0];
          ritz = combine(basis, std::span(te.vectors).first(dim), n);
          scale(ritz, 1.0 / norm(ritz));
          converged_estimate = true;
          break;
        }
      }
      beta.push_back(b);
      scale(w, 1.0 / b);
      basis.push_back(w);
    }

    if (!converged_estimate) {
      // Budget exhausted mid-cycle without a Ritz vector.
      throw ConvergenceError("lanczos did not converge within " +
                                 std::to_string(options.max_iterations) + " applications",
                             best_residual);
    }
    const double r = residual_norm(h, ritz, theta, hx);
    best_residual = std::min(best_residual, r);
    if (r <= options.tolerance) {
      return {theta, std::move(ritz), r, applications};
    }
    if (applications >= options.max_iterations) {
      std::ostringstream os;
      os << "lanczos did not converge within " << options.max_iterations
         << " applications (best residual " << best_residual << ")";
      throw ConvergenceError(os.str(), best_residual);
    }
    start = std::move(ritz);
  }
}

GroundState ground_state(const HamiltonianSpec& spec, double tolerance, int max_iterations,
                         std::uint64_t seed, std::size_t workers) {
  require_hermitian(spec);
  LanczosOptions options;
  options.tolerance = tolerance;
  options.max_iterations = max_iterations;
  options.seed = seed;
  auto pair = lanczos_ground_state(make_map(spec, workers), options);
  return {pair.energy, StateVector(spec.space, std::move(pair.vector)), pair.residual,
          pair.iterations};
}

MixtureGroundState ground_state(const mixtures::MixtureHamiltonian& h, double tolerance,
                                int max_iterations, std::uint64_t seed, std::size_t workers) {
  require_hermitian(h);
  LanczosOptions options;
  options.tolerance = tolerance;
  options.max_iterations = max_iterations;
  options.seed = seed;
  auto pair = lanczos_ground_state(make_map(h, workers), options);
  return {pair.energy, mixtures::MixtureStateVector(h.space, std::move(pair.vector)),
          pair.residual, pair.iterations};
}

double PropagationResult::max_norm_drift() const {
  double d = 0.0;
  for (double x : norms) d = std::max(d, std::abs(x - norms.front()));
  return d;
}

double PropagationResult::max_energy_drift() const {
  double d = 0.0;
  for (double x : energies) d = std::max(d, std::abs(x - energies.front()));
  return d;
}

PropagationResult propagate(const LinearMap& h, std::span<const cplx> psi0,
                            const PropagationOptions& options, const SampleFn& sample) {
  const std::size_t n = h.dimension;
  if (psi0.size() != n) throw SizeError("propagate: initial state has the wrong length");
  if (!(options.dt > 0.0)) throw ValidationError("propagate: dt must be positive");
  if (options.t_final < 0.0) throw ValidationError("propagate: t_final must be non-negative");
  if (options.krylov_dimension < 1) throw ValidationError("propagate: krylov dimension must be >= 1");

  PropagationResult result;
  Vec psi(psi0.begin(), psi0.end());
  Vec hpsi(n);
  const int m_max = static_cast<int>(std::min<std::size_t>(n, options.krylov_dimension));
  const double log_factorial_m = std::lgamma(static_cast<double>(m_max) + 1.0);

  auto record = [&](double t) {
    h.apply(psi, hpsi);
    const double nrm = norm(psi);
    result.times.push_back(t);
    result.norms.push_back(nrm);
    result.energies.push_back(nrm > 0.0 ? dot(psi, hpsi).real() / (nrm * nrm) : 0.0);
    if (sample) result.samples.push_back(sample(psi));
    if (options.keep_snapshots) result.snapshots.push_back(psi);
  };

  record(0.0);
  const auto outputs = static_cast<long>(std::ceil(options.t_final / options.dt - 1e-9));
  double t = 0.0;
  std::vector<Vec> basis;
  Vec w(n);
  for (long k = 1; k <= outputs; ++k) {
    const double t_next = std::min(options.t_final, static_cast<double>(k) * options.dt);
    while (t < t_next) {
      const double remaining = t_next - t;
      const double nu = norm(psi);
      if (nu == 0.0) {
        t = t_next;
        break;
      }
      basis.assign(1, psi);
      scale(basis[0], 1.0 / nu);
      std::vector<double> alpha;
      std::vector<double> beta;
      double log_beta_product = 0.0;
      bool breakdown = false;
      for (int j = 0; j < m_max; ++j) {
        h.apply(basis[j], w);
        alpha.push_back(dot(basis[j], w).real());
        orthogonalize(w, basis);
        const double b = norm(w);
        if (b <= 1e-13 * std::max(1.0, std::abs(alpha.back()))) {
          breakdown = true;
          break;
        }
        log_beta_product += std::log(b);
        if (j + 1 == m_max) break;
        beta.push_back(b);
        scale(w, 1.0 / b);
        basis.push_back(w);
      }
      const int dim = static_cast<int>(alpha.size());

      double step = remaining;
      double error = 0.0;
      if (!breakdown) {
        // (h^m / m!) prod beta <= tol
        const double log_h = (std::log(options.error_tolerance) + log_factorial_m - log_beta_product) /
                             static_cast<double>(dim);
        step = std::min(remaining, std::exp(log_h));
        if (step < options.min_step_fraction * options.dt && step < remaining) {
          std::ostringstream os;
          os << "propagation step at t = " << t << " shrank to " << step
             << " without meeting the error tolerance " << options.error_tolerance;
          throw StepFailure(os.str(), t);
        }
        error = std::exp(dim * std::log(step) - log_factorial_m + log_beta_product);
      }

      const auto te = tridiagonal_eigen(alpha, beta);
      std::vector<cplx> c(dim, cplx{});
      for (int a = 0; a < dim; ++a) {
        const double z0 = te.vectors[static_cast<std::size_t>(a) * dim];
        const cplx phase = std::exp(cplx(0.0, -te.values[a] * step)) * z0;
        for (int i = 0; i < dim; ++i) c[i] += te.vectors[static_cast<std::size_t>(a) * dim + i] * phase;
      }
      std::fill(psi.begin(), psi.end(), cplx{});
      for (int j = 0; j < dim; ++j) {
        const cplx f = nu * c[j];
        for (std::size_t i = 0; i < n; ++i) psi[i] += f * basis[j][i];
      }
      result.step_sizes.push_back(step);
      result.step_errors.push_back(error);
      t = (step == remaining) ? t_next : t + step;
    }
    record(t_next);
  }
  result.final_state = std::move(psi);
  return result;
}

PropagationResult propagate(const HamiltonianSpec& spec, const StateVector& psi0,
                            const PropagationOptions& options, std::size_t workers) {
  require_hermitian(spec);
  require_same_space(spec.space, psi0.space(), "propagate");
  const SpaceDescriptor space = spec.space;
  const int m = space.orbitals();
  SampleFn sample = [space, m](std::span<const cplx> psi) {
    StateVector v(space, std::vector<cplx>(psi.begin(), psi.end()));
    std::vector<double> out(m);
    for (int k = 1; k <= m; ++k) out[k - 1] = observables::one_body_element(v, k, k).real();
    return out;
  };
  return propagate(make_map(spec, workers), psi0.amplitudes(), options, sample);
}

PropagationResult propagate(const mixtures::MixtureHamiltonian& h,
                            const mixtures::MixtureStateVector& psi0,
                            const PropagationOptions& options, std::size_t workers) {
  require_hermitian(h);
  if (!(h.space == psi0.space())) throw SpaceMismatch("propagate: mixture spaces differ");
  const mixtures::MixtureSpace space = h.space;
  SampleFn sample = [space](std::span<const cplx> psi) {
    mixtures::MixtureStateVector v(space, std::vector<cplx>(psi.begin(), psi.end()));
    const auto [a, b] = observables::mixture_densities(v);
    std::vector<double> out;
    for (int k = 1; k <= a.orbitals(); ++k) out.push_back(a(k, k).real());
    for (int k = 1; k <= b.orbitals(); ++k) out.push_back(b(k, k).real());
    return out;
  };
  return propagate(make_map(h, workers), psi0.amplitudes(), options, sample);
}

std::string series_csv(const PropagationResult& result, const std::vector<std::string>& columns) {
  std::ostringstream os;
  os.precision(17);
  os << "# fock-series-1\ntime,norm,energy";
  for (const auto& c : columns) os << ',' << c;
  os << '\n';
  for (std::size_t i = 0; i < result.times.size(); ++i) {
    os << result.times[i] << ',' << result.norms[i] << ',' << result.energies[i];
    if (i < result.samples.size()) {
      for (double v : result.samples[i]) os << ',' << v;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fock::solvers
