// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

// fock: enumerate configurations, find ground states, propagate and apply
// Hamiltonians read from integral files.
//
// Exit codes: 0 success, 1 usage, 2 input (parse, validation, space mismatch),
// 3 convergence, 4 propagation step failure.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fock/combinadics.hpp"
#include "fock/error.hpp"
#include "fock/executor.hpp"
#include "fock/integral_io.hpp"
#include "fock/kernel.hpp"
#include "fock/mixtures.hpp"
#include "fock/observables.hpp"
#include "fock/oracle.hpp"
#include "fock/parallel.hpp"
#include "fock/solvers.hpp"
#include "fock/vector_io.hpp"

namespace {

using namespace fock;
using mixtures::MixtureHamiltonian;
using mixtures::MixtureSpace;
using mixtures::MixtureStateVector;
using nlohmann::json;

enum ExitCode : int { kOk = 0, kUsage = 1, kInput = 2, kConvergence = 3, kStepFailure = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string statistics;  // "fermion", "boson", "mix" or empty
  std::optional<int> n, m, nb, mb;
  std::string file;
  std::string out;
  std::optional<std::size_t> workers;
  bool oracle = false;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  int max_iter = 1000;
  double dt = 0.05;
  double t_final = 1.0;
  int krylov_dim = 15;
  double err_tol = 1e-12;

  // enum
  std::string holes, occ;
  std::optional<std::uint64_t> address;
  bool all = false;

  // gs
  bool rho = false;

  // prop
  std::string init, init_file, final_state;

  // apply
  std::string in;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
      throw UsageError("not an integer list: '" + text + "'");
    }
    values.push_back(v);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  if (values.empty()) throw UsageError("empty integer list");
  return values;
}

std::string ket(const OccupationVector& occ, Statistics statistics) {
  std::string s = "|";
  for (std::size_t i = 0; i < occ.n.size(); ++i) {
    if (statistics == Statistics::Boson && i > 0) s += ',';
    s += std::to_string(occ.n[i]);
  }
  return s + "⟩";
}

// Occupations "2,0,0", bit string "1100", or for one orbital a bare count.
OccupationVector parse_literal(const std::string& text, const SpaceDescriptor& space) {
  OccupationVector occ;
  if (text.find(',') != std::string::npos) {
    occ.n = parse_int_list(text);
  } else if (static_cast<int>(text.size()) == space.orbitals() &&
             std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    for (char c : text) occ.n.push_back(c - '0');
  } else if (space.orbitals() == 1) {
    occ.n = parse_int_list(text);
  } else {
    throw UsageError("cannot read configuration literal '" + text + "'");
  }
  combinadics::validate(occ, space);
  return occ;
}

Statistics statistics_flag(const RunConfig& cfg) {
  if (cfg.statistics == "fermion") return Statistics::Fermion;
  if (cfg.statistics == "boson") return Statistics::Boson;
  throw UsageError("enum needs --fermion or --boson");
}

void write_text(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

// Flags that restate the model must agree with the file.
void check_against_flags(const RunConfig& cfg, const io::Model& model) {
  auto mismatch = [](const std::string& what) {
    throw UsageError(what + " does not match the integral file");
  };
  if (const auto* spec = std::get_if<HamiltonianSpec>(&model)) {
    if (cfg.statistics == "mix") mismatch("--mix");
    if (!cfg.statistics.empty() && cfg.statistics != to_string(spec->space.statistics())) {
      mismatch("--" + cfg.statistics);
    }
    if (cfg.n && *cfg.n != spec->space.particles()) mismatch("-N");
    if (cfg.m && *cfg.m != spec->space.orbitals()) mismatch("-M");
    if (cfg.nb || cfg.mb) throw UsageError("-NB/-MB apply to mixtures only");
  } else {
    const auto& h = std::get<MixtureHamiltonian>(model);
    if (!cfg.statistics.empty() && cfg.statistics != "mix") mismatch("--" + cfg.statistics);
    if (cfg.n && *cfg.n != h.space.a().particles()) mismatch("-N");
    if (cfg.m && *cfg.m != h.space.a().orbitals()) mismatch("-M");
    if (cfg.nb && *cfg.nb != h.space.b().particles()) mismatch("-NB");
    if (cfg.mb && *cfg.mb != h.space.b().orbitals()) mismatch("-MB");
  }
}

io::Model load(const RunConfig& cfg) {
  if (cfg.file.empty()) throw UsageError("--file is required");
  auto model = io::load_model(cfg.file);
  check_against_flags(cfg, model);
  return model;
}

Index model_dimension(const io::Model& model) {
  return std::visit([](const auto& h) -> Index { return h.space.dimension(); }, model);
}

std::size_t workers_of(const RunConfig& cfg) {
  try {
    return executor::resolve_workers(cfg.workers);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
}

void require_oracle_size(const RunConfig& cfg, Index dimension) {
  if (cfg.oracle && dimension > oracle::kDefaultCap) {
    throw UsageError("--oracle needs N_conf <= " + std::to_string(oracle::kDefaultCap) + " (have " +
                     std::to_string(dimension) + ")");
  }
}

json space_json(const SpaceDescriptor& s) {
  return {{"statistics", to_string(s.statistics())},
          {"N", s.particles()},
          {"M", s.orbitals()},
          {"dimension", s.dimension()}};
}

int cmd_enum(const RunConfig& cfg) {
  if (!cfg.n || !cfg.m) throw UsageError("enum needs -N and -M");
  const SpaceDescriptor space(statistics_flag(cfg), *cfg.n, *cfg.m);
  const int queries = !cfg.holes.empty() + !cfg.occ.empty() + cfg.address.has_value() + cfg.all;
  if (queries != 1) throw UsageError("enum needs exactly one of --holes, --occ, -J, --all");

  std::ostringstream os;
  if (cfg.all) {
    for_each_configuration(space, [&](const Configuration& c) {
      os << c.address.value << '\t' << ket(c.occupations, space.statistics()) << '\n';
    });
  } else if (!cfg.holes.empty()) {
    if (!space.is_fermionic()) throw UsageError("--holes applies to fermions");
    HoleVector holes{parse_int_list(cfg.holes)};
    combinadics::validate(holes, space);
    os << combinadics::fermion_rank(holes, space).value << '\n';
  } else if (!cfg.occ.empty()) {
    os << combinadics::rank(parse_literal(cfg.occ, space), space).value << '\n';
  } else {
    const Address j(*cfg.address);
    combinadics::validate(j, space);
    os << ket(combinadics::unrank(j, space), space.statistics()) << '\n';
  }
  write_text(cfg, os.str());
  return kOk;
}

json density_json(const StateVector& psi, bool with_matrices) {
  const auto rho1 = observables::one_body_density(psi);
  json j = {{"natural_occupations", rho1.natural_occupations()}};
  if (with_matrices) {
    j["rho1"] = observables::to_json(rho1);
    j["rho2"] = observables::to_json(observables::two_body_density(psi));
  }
  return j;
}

int cmd_gs(const RunConfig& cfg) {
  const auto model = load(cfg);
  require_oracle_size(cfg, model_dimension(model));
  const std::size_t workers = workers_of(cfg);

  json report = {{"format", "fock-gs-1"}};
  double energy = 0.0;
  std::optional<oracle::DenseOperator> dense;

  if (const auto* spec = std::get_if<HamiltonianSpec>(&model)) {
    const auto gs = solvers::ground_state(*spec, cfg.tol, cfg.max_iter, cfg.seed, workers);
    energy = gs.energy;
    report["space"] = space_json(spec->space);
    report["energy"] = gs.energy;
    report["residual"] = gs.residual;
    report["iterations"] = gs.iterations;
    report.update(density_json(gs.state, cfg.rho));
    if (cfg.oracle) dense = oracle::build_dense(*spec);
  } else {
    const auto& h = std::get<MixtureHamiltonian>(model);
    const auto gs = solvers::ground_state(h, cfg.tol, cfg.max_iter, cfg.seed, workers);
    energy = gs.energy;
    report["space"] = {{"A", space_json(h.space.a())},
                       {"B", space_json(h.space.b())},
                       {"dimension", h.space.dimension()}};
    report["energy"] = gs.energy;
    report["residual"] = gs.residual;
    report["iterations"] = gs.iterations;
    const auto [a, b] = observables::mixture_densities(gs.state);
    report["natural_occupations"] = {{"A", a.natural_occupations()},
                                     {"B", b.natural_occupations()}};
    if (cfg.rho) {
      report["rho1"] = {{"A", observables::to_json(a)}, {"B", observables::to_json(b)}};
    }
    if (cfg.oracle) dense = oracle::build_dense(h);
  }
  report["workers"] = workers;
  report["seed"] = cfg.seed;
  if (dense) {
    const double exact = oracle::dense_eig(*dense).values(0);
    report["oracle"] = {{"energy", exact}, {"max_deviation", std::abs(energy - exact)}};
  }
  write_text(cfg, report.dump(2) + "\n");
  return kOk;
}

StateVector initial_state(const RunConfig& cfg, const SpaceDescriptor& space) {
  if (!cfg.init_file.empty()) {
    auto psi = io::load_vector(cfg.init_file);
    require_same_space(psi.space(), space, "initial state");
    return psi;
  }
  return StateVector::basis(space, combinadics::rank(parse_literal(cfg.init, space), space));
}

MixtureStateVector initial_state(const RunConfig& cfg, const MixtureSpace& space) {
  if (!cfg.init_file.empty()) {
    std::ifstream f(cfg.init_file, std::ios::binary);
    if (!f) throw ParseError("cannot open " + cfg.init_file, 0);
    auto psi = io::read_mixture_vector(f);
    if (!(psi.space() == space)) throw SpaceMismatch("initial state: mixture space differs from the model");
    return psi;
  }
  const auto slash = cfg.init.find('/');
  if (slash == std::string::npos) throw UsageError("mixture --init needs A/B, e.g. 110/10");
  const auto a = parse_literal(cfg.init.substr(0, slash), space.a());
  const auto b = parse_literal(cfg.init.substr(slash + 1), space.b());
  return MixtureStateVector::basis(space, combinadics::rank(a, space.a()),
                                   combinadics::rank(b, space.b()));
}

std::vector<std::string> density_columns(const std::string& prefix, int orbitals) {
  std::vector<std::string> columns;
  for (int k = 1; k <= orbitals; ++k) columns.push_back(prefix + std::to_string(k));
  return columns;
}

void append_oracle_deviation(solvers::PropagationResult& r, const oracle::DenseOperator& dense,
                             std::span<const cplx> psi0, std::vector<std::string>& columns) {
  const auto spectrum = oracle::dense_eig(dense);
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    const auto exact = oracle::dense_expm_apply(spectrum, psi0, r.times[i]);
    double d = 0.0;
    for (std::size_t x = 0; x < exact.size(); ++x) d += std::norm(exact[x] - r.snapshots[i][x]);
    r.samples[i].push_back(std::sqrt(d));
  }
  columns.push_back("oracle_deviation");
}

int cmd_prop(const RunConfig& cfg) {
  if (cfg.init.empty() == cfg.init_file.empty()) {
    throw UsageError("prop needs exactly one of --init, --init-file");
  }
  const auto model = load(cfg);
  require_oracle_size(cfg, model_dimension(model));
  const std::size_t workers = workers_of(cfg);

  solvers::PropagationOptions opt;
  opt.t_final = cfg.t_final;
  opt.dt = cfg.dt;
  opt.krylov_dimension = cfg.krylov_dim;
  opt.error_tolerance = cfg.err_tol;
  opt.keep_snapshots = cfg.oracle;

  std::string csv;
  if (const auto* spec = std::get_if<HamiltonianSpec>(&model)) {
    const auto psi0 = initial_state(cfg, spec->space);
    auto r = solvers::propagate(*spec, psi0, opt, workers);
    auto columns = density_columns("n", spec->space.orbitals());
    if (cfg.oracle) append_oracle_deviation(r, oracle::build_dense(*spec), psi0.amplitudes(), columns);
    if (!cfg.final_state.empty()) {
      io::save_vector(cfg.final_state, StateVector(spec->space, r.final_state));
    }
    csv = solvers::series_csv(r, columns);
  } else {
    const auto& h = std::get<MixtureHamiltonian>(model);
    const auto psi0 = initial_state(cfg, h.space);
    auto r = solvers::propagate(h, psi0, opt, workers);
    auto columns = density_columns("nA", h.space.a().orbitals());
    for (auto& c : density_columns("nB", h.space.b().orbitals())) columns.push_back(c);
    if (cfg.oracle) append_oracle_deviation(r, oracle::build_dense(h), psi0.amplitudes(), columns);
    if (!cfg.final_state.empty()) {
      std::ofstream f(cfg.final_state, std::ios::binary);
      if (!f) throw UsageError("cannot write " + cfg.final_state);
      io::write_mixture_vector(f, MixtureStateVector(h.space, r.final_state));
    }
    csv = solvers::series_csv(r, columns);
  }
  write_text(cfg, csv);
  return kOk;
}

double max_deviation(std::span<const cplx> a, std::span<const cplx> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

int cmd_apply(const RunConfig& cfg) {
  if (cfg.in.empty()) throw UsageError("apply needs --in");
  if (cfg.out.empty()) throw UsageError("apply needs --out for the result vector");
  const auto model = load(cfg);
  require_oracle_size(cfg, model_dimension(model));
  const std::size_t workers = workers_of(cfg);

  json report = {{"format", "fock-apply-1"}};
  if (const auto* spec = std::get_if<HamiltonianSpec>(&model)) {
    const auto psi = io::load_vector(cfg.in);
    require_same_space(psi.space(), spec->space, "input vector");
    const auto out = executor::parallel_apply(*spec, psi, workers);
    io::save_vector(cfg.out, out);
    report["expectation"] = complex_json(dot(psi, out));
    report["norm_in"] = psi.norm();
    report["norm_out"] = out.norm();
    if (cfg.oracle) {
      const auto exact = oracle::build_dense(*spec).apply(psi.amplitudes());
      report["oracle"] = {{"max_deviation", max_deviation(exact, out.amplitudes())}};
    }
  } else {
    const auto& h = std::get<MixtureHamiltonian>(model);
    std::ifstream f(cfg.in, std::ios::binary);
    if (!f) throw ParseError("cannot open " + cfg.in, 0);
    const auto psi = io::read_mixture_vector(f);
    if (!(psi.space() == h.space)) throw SpaceMismatch("input vector: mixture space differs from the model");
    const auto out = executor::parallel_apply(h, psi, workers);
    std::ofstream o(cfg.out, std::ios::binary);
    if (!o) throw UsageError("cannot write " + cfg.out);
    io::write_mixture_vector(o, out);
    report["expectation"] = complex_json(mixtures::dot(psi, out));
    report["norm_in"] = psi.norm();
    report["norm_out"] = out.norm();
    if (cfg.oracle) {
      const auto exact = oracle::build_dense(h).apply(psi.amplitudes());
      report["oracle"] = {{"max_deviation", max_deviation(exact, out.amplitudes())}};
    }
  }
  std::cout << report.dump(2) << "\n";
  return kOk;
}

// CLI11 short options are single characters; spell the two-letter ones long.
std::vector<std::string> normalize_arguments(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a == "-NB") a = "--nb";
    else if (a == "-MB") a = "--mb";
    args.push_back(a);
  }
  return args;  // reversed, as CLI11 expects for vector input
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--file", cfg.file, "Integral file");
  sub->add_option("--workers", cfg.workers, "Worker threads (default: FOCK_WORKERS or 1)");
  sub->add_flag("--oracle", cfg.oracle, "Compare against the dense reference");
  sub->add_option("--out", cfg.out, "Output path (default: stdout)");
}

void add_space(CLI::App* sub, RunConfig& cfg, bool mixtures_allowed) {
  auto* f = sub->add_flag_callback("--fermion", [&cfg] { cfg.statistics = "fermion"; }, "Fermions");
  auto* b = sub->add_flag_callback("--boson", [&cfg] { cfg.statistics = "boson"; }, "Bosons");
  f->excludes(b);
  if (mixtures_allowed) {
    auto* m = sub->add_flag_callback("--mix", [&cfg] { cfg.statistics = "mix"; }, "Two-component mixture");
    m->excludes(f)->excludes(b);
    sub->add_option("--nb", cfg.nb, "Particles of species B (-NB)");
    sub->add_option("--mb", cfg.mb, "Orbitals of species B (-MB)");
  }
  sub->add_option("-N", cfg.n, "Particles (species A for mixtures)");
  sub->add_option("-M", cfg.m, "Orbitals (species A for mixtures)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-free Fock-space engine"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* en = app.add_subcommand("enum", "Rank or unrank configurations");
  add_space(en, cfg, false);
  en->add_option("--holes", cfg.holes, "Fermion hole positions, e.g. 2,6,8");
  en->add_option("--occ", cfg.occ, "Occupations, e.g. 2,0,0 or 1100");
  en->add_option("-J", cfg.address, "Address to unrank");
  en->add_flag("--all", cfg.all, "List every configuration");
  en->add_option("--out", cfg.out, "Output path (default: stdout)");

  auto* gs = app.add_subcommand("gs", "Ground state by Lanczos");
  add_space(gs, cfg, true);
  add_common(gs, cfg);
  gs->add_option("--seed", cfg.seed, "Start-vector seed");
  gs->add_option("--tol", cfg.tol, "Residual tolerance");
  gs->add_option("--max-iter", cfg.max_iter, "Operator applications");
  gs->add_flag("--rho", cfg.rho, "Include density matrices");

  auto* pr = app.add_subcommand("prop", "Time propagation by short iterative Lanczos");
  add_space(pr, cfg, true);
  add_common(pr, cfg);
  pr->add_option("--init", cfg.init, "Initial configuration literal (A/B for mixtures)");
  pr->add_option("--init-file", cfg.init_file, "Initial state vector file");
  pr->add_option("--dt", cfg.dt, "Output interval");
  pr->add_option("--t-final", cfg.t_final, "Final time");
  pr->add_option("--krylov-dim", cfg.krylov_dim, "Krylov dimension");
  pr->add_option("--err-tol", cfg.err_tol, "Per-step error tolerance");
  pr->add_option("--final-state", cfg.final_state, "Write the final state vector here");

  auto* ap = app.add_subcommand("apply", "Apply the Hamiltonian to a vector");
  add_space(ap, cfg, true);
  add_common(ap, cfg);
  ap->add_option("--in", cfg.in, "Input vector file");

  try {
    app.parse(normalize_arguments(argc, argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (en->parsed()) return cmd_enum(cfg);
    if (gs->parsed()) return cmd_gs(cfg);
    if (pr->parsed()) return cmd_prop(cfg);
    return cmd_apply(cfg);
  } catch (const UsageError& e) {
    std::cerr << "fock: " << e.what() << '\n';
    return kUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "fock: " << e.what() << " (best residual " << e.best_residual() << ")\n";
    return kConvergence;
  } catch (const StepFailure& e) {
    std::cerr << "fock: " << e.what() << " (at t = " << e.time() << ")\n";
    return kStepFailure;
  } catch (const ParseError& e) {
    std::cerr << "fock: " << e.what() << '\n';
    return kInput;
  } catch (const ValidationError& e) {
    std::cerr << "fock: " << e.what() << '\n';
    return kInput;
  } catch (const SpaceMismatch& e) {
    std::cerr << "fock: " << e.what() << '\n';
    return kInput;
  } catch (const SizeError& e) {
    std::cerr << "fock: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    // Invalid spaces, configurations and addresses given on the command line.
    std::cerr << "fock: " << e.what() << '\n';
    return kUsage;
  }
}
