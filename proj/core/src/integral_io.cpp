// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/integral_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fock/error.hpp"
#include "fock/vector_io.hpp"

namespace fock::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const std::string& s, std::size_t line) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + s + "'", line);
  }
  return v;
}

double parse_double(const std::string& s, std::size_t line) {
  double v = 0.0;
  const char* begin = s.data();
  if (!s.empty() && s[0] == '+') ++begin;
  const auto [p, ec] = std::from_chars(begin, s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError("expected a number, got '" + s + "'", line);
  }
  return v;
}

Statistics parse_statistics(const std::string& s, std::size_t line) {
  if (s == "FERMION") return Statistics::Fermion;
  if (s == "BOSON") return Statistics::Boson;
  throw ParseError("unknown statistics '" + s + "' (expected FERMION or BOSON)", line);
}

const char* keyword(Statistics s) { return s == Statistics::Fermion ? "FERMION" : "BOSON"; }

// Reads `count` 1-based indices then re [im] starting at token 1.
std::pair<std::vector<int>, cplx> entry(const Line& line, int count,
                                        std::initializer_list<int> limits) {
  const auto& t = line.tokens;
  const std::size_t need = 1 + count + 1;
  if (t.size() != need && t.size() != need + 1) {
    throw ParseError(t[0] + " expects " + std::to_string(count) + " indices and re [im]",
                     line.number);
  }
  std::vector<int> idx(count);
  auto lim = limits.begin();
  for (int i = 0; i < count; ++i, ++lim) {
    idx[i] = parse_int(t[1 + i], line.number);
    if (idx[i] < 1 || idx[i] > *lim) {
      throw ParseError("index " + std::to_string(idx[i]) + " outside [1, " + std::to_string(*lim) +
                           "]",
                       line.number);
    }
  }
  const double re = parse_double(t[1 + count], line.number);
  const double im = t.size() == need + 1 ? parse_double(t[need], line.number) : 0.0;
  return {idx, {re, im}};
}

SpaceDescriptor make_space(Statistics s, int n, int m, std::size_t line) {
  try {
    return SpaceDescriptor(s, n, m);
  } catch (const Error& e) {
    throw ParseError(e.what(), line);
  }
}

void add_h(OneBodyTable& h, const Line& line) {
  const auto [i, v] = entry(line, 2, {h.orbitals(), h.orbitals()});
  h(i[0], i[1]) += v;
}

void add_w(TwoBodyTable& w, const Line& line) {
  const int m = w.orbitals();
  const auto [i, v] = entry(line, 4, {m, m, m, m});
  w.add(i[0], i[1], i[2], i[3], v);
}

void write_complex(std::ostream& out, cplx v) {
  out << v.real();
  if (v.imag() != 0.0) out << ' ' << v.imag();
  out << '\n';
}

void write_tables(std::ostream& out, const HamiltonianSpec& spec, const char* h_key,
                  const char* w_key) {
  const int m = spec.space.orbitals();
  for (int k = 1; k <= m; ++k) {
    for (int q = 1; q <= m; ++q) {
      const cplx v = spec.one_body(k, q);
      if (v == cplx{}) continue;
      out << h_key << ' ' << k << ' ' << q << ' ';
      write_complex(out, v);
    }
  }
  spec.two_body.for_each_nonzero([&](int k, int s, int q, int l, cplx v) {
    out << w_key << ' ' << k << ' ' << s << ' ' << q << ' ' << l << ' ';
    write_complex(out, v);
  });
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.precision(std::numeric_limits<double>::max_digits10);
  return out;
}

}  // namespace

Model parse_model(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "STATISTICS") {
    throw ParseError("file must start with a STATISTICS line", lines.empty() ? 0 : lines[0].number);
  }
  const auto& head = lines[0].tokens;
  const bool mixture = head.size() >= 2 && head[1] == "MIX";
  if (mixture ? head.size() != 4 : head.size() != 2) {
    throw ParseError("expected 'STATISTICS FERMION|BOSON' or 'STATISTICS MIX <A> <B>'",
                     lines[0].number);
  }

  const std::vector<std::string> header_keys =
      mixture ? std::vector<std::string>{"NA", "MA", "NB", "MB"} : std::vector<std::string>{"N", "M"};
  std::map<std::string, int> header;
  std::size_t i = 1;
  for (; i < lines.size() && header.size() < header_keys.size(); ++i) {
    const auto& t = lines[i].tokens;
    if (std::find(header_keys.begin(), header_keys.end(), t[0]) == header_keys.end()) {
      throw ParseError("expected header line " + header_keys[header.size()] + ", got '" + t[0] + "'",
                       lines[i].number);
    }
    if (t.size() != 2) throw ParseError(t[0] + " expects one integer", lines[i].number);
    if (!header.emplace(t[0], parse_int(t[1], lines[i].number)).second) {
      throw ParseError("duplicate header line " + t[0], lines[i].number);
    }
  }
  if (header.size() < header_keys.size()) {
    for (const auto& k : header_keys) {
      if (!header.count(k)) throw ParseError("missing header line " + k, 0);
    }
  }
  const std::size_t header_line = lines[i - 1].number;

  if (!mixture) {
    HamiltonianSpec spec(
        make_space(parse_statistics(head[1], lines[0].number), header["N"], header["M"], header_line));
    for (; i < lines.size(); ++i) {
      const auto& key = lines[i].tokens[0];
      if (key == "H") {
        add_h(spec.one_body, lines[i]);
      } else if (key == "W") {
        add_w(spec.two_body, lines[i]);
      } else {
        throw ParseError("unknown line type '" + key + "'", lines[i].number);
      }
    }
    return spec;
  }

  const auto sa = make_space(parse_statistics(head[2], lines[0].number), header["NA"], header["MA"],
                             header_line);
  const auto sb = make_space(parse_statistics(head[3], lines[0].number), header["NB"], header["MB"],
                             header_line);
  mixtures::MixtureHamiltonian h(mixtures::MixtureSpace(sa, sb));
  for (; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& key = line.tokens[0];
    if (key == "HA") {
      add_h(h.a.one_body, line);
    } else if (key == "HB") {
      add_h(h.b.one_body, line);
    } else if (key == "WA") {
      add_w(h.a.two_body, line);
    } else if (key == "WB") {
      add_w(h.b.two_body, line);
    } else if (key == "X") {
      const int ma = sa.orbitals();
      const int mb = sb.orbitals();
      const auto [idx, v] = entry(line, 4, {ma, ma, mb, mb});
      h.ab(idx[0], idx[2], idx[1], idx[3]) += v;
    } else {
      throw ParseError("unknown line type '" + key + "'", line.number);
    }
  }
  return h;
}

Model load_model(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_model(in);
}

HamiltonianSpec parse_integrals(std::istream& in) {
  auto model = parse_model(in);
  if (auto* spec = std::get_if<HamiltonianSpec>(&model)) return std::move(*spec);
  throw ParseError("expected a single-species integral file, found a mixture", 1);
}

HamiltonianSpec load_integrals(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_integrals(in);
}

mixtures::MixtureHamiltonian load_mixture_integrals(const std::filesystem::path& path) {
  auto model = load_model(path);
  if (auto* h = std::get_if<mixtures::MixtureHamiltonian>(&model)) return std::move(*h);
  throw ParseError("expected a mixture integral file", 1);
}

void write_integrals(std::ostream& out, const HamiltonianSpec& spec) {
  const auto precision = out.precision(std::numeric_limits<double>::max_digits10);
  out << "STATISTICS " << keyword(spec.space.statistics()) << '\n'
      << "N " << spec.space.particles() << '\n'
      << "M " << spec.space.orbitals() << '\n';
  write_tables(out, spec, "H", "W");
  out.precision(precision);
}

void write_integrals(std::ostream& out, const mixtures::MixtureHamiltonian& h) {
  const auto precision = out.precision(std::numeric_limits<double>::max_digits10);
  const auto& sa = h.space.a();
  const auto& sb = h.space.b();
  out << "STATISTICS MIX " << keyword(sa.statistics()) << ' ' << keyword(sb.statistics()) << '\n'
      << "NA " << sa.particles() << '\n'
      << "MA " << sa.orbitals() << '\n'
      << "NB " << sb.particles() << '\n'
      << "MB " << sb.orbitals() << '\n';
  write_tables(out, h.a, "HA", "WA");
  write_tables(out, h.b, "HB", "WB");
  for (int k = 1; k <= sa.orbitals(); ++k) {
    for (int q = 1; q <= sa.orbitals(); ++q) {
      for (int kp = 1; kp <= sb.orbitals(); ++kp) {
        for (int qp = 1; qp <= sb.orbitals(); ++qp) {
          const cplx v = h.ab(k, kp, q, qp);
          if (v == cplx{}) continue;
          out << "X " << k << ' ' << q << ' ' << kp << ' ' << qp << ' ';
          write_complex(out, v);
        }
      }
    }
  }
  out.precision(precision);
}

void save_integrals(const std::filesystem::path& path, const HamiltonianSpec& spec) {
  auto out = open_out(path);
  write_integrals(out, spec);
}

void save_integrals(const std::filesystem::path& path, const mixtures::MixtureHamiltonian& h) {
  auto out = open_out(path);
  write_integrals(out, h);
}

void write_mixture_vector(std::ostream& out, const mixtures::MixtureStateVector& v) {
  const auto& sa = v.space().a();
  const auto& sb = v.space().b();
  out.write(kMixtureMagic, sizeof kMixtureMagic);
  out.put(static_cast<char>(sa.statistics()));
  out.put(static_cast<char>(sb.statistics()));
  write_u64(out, static_cast<std::uint64_t>(sa.particles()));
  write_u64(out, static_cast<std::uint64_t>(sa.orbitals()));
  write_u64(out, static_cast<std::uint64_t>(sb.particles()));
  write_u64(out, static_cast<std::uint64_t>(sb.orbitals()));
  write_u64(out, v.space().dimension());
  for (const auto& a : v.amplitudes()) {
    write_f64(out, a.real());
    write_f64(out, a.imag());
  }
  if (!out) throw Error("failed to write mixture vector");
}

mixtures::MixtureStateVector read_mixture_vector(std::istream& in) {
  char magic[8];
  if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + 8, kMixtureMagic)) {
    throw ParseError("not a FOCKMIX1 mixture vector", 0);
  }
  const int stat_a = in.get();
  const int stat_b = in.get();
  if ((stat_a != 0 && stat_a != 1) || (stat_b != 0 && stat_b != 1)) {
    throw ParseError("bad statistics byte in mixture vector header", 0);
  }
  const auto na = read_u64(in);
  const auto ma = read_u64(in);
  const auto nb = read_u64(in);
  const auto mb = read_u64(in);
  const auto dim = read_u64(in);
  if (na > 1u << 20 || ma > 1u << 20 || nb > 1u << 20 || mb > 1u << 20) {
    throw ParseError("implausible N or M in mixture vector header", 0);
  }
  const mixtures::MixtureSpace space(
      SpaceDescriptor(static_cast<Statistics>(stat_a), static_cast<int>(na), static_cast<int>(ma)),
      SpaceDescriptor(static_cast<Statistics>(stat_b), static_cast<int>(nb), static_cast<int>(mb)));
  if (dim != space.dimension()) {
    throw ParseError("mixture vector header N_conf " + std::to_string(dim) + " does not match " +
                         std::to_string(space.dimension()),
                     0);
  }
  std::vector<cplx> amplitudes(dim);
  for (auto& a : amplitudes) {
    const double re = read_f64(in);
    const double im = read_f64(in);
    a = {re, im};
  }
  return mixtures::MixtureStateVector(space, std::move(amplitudes));
}

}  // namespace fock::io
