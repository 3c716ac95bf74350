// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "fock/vector_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "fock/error.hpp"

namespace fock::io {

void write_u64(std::ostream& out, std::uint64_t x) {
  std::array<char, 8> bytes;
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((x >> (8 * i)) & 0xff);
  out.write(bytes.data(), bytes.size());
}

void write_f64(std::ostream& out, double x) { write_u64(out, std::bit_cast<std::uint64_t>(x)); }

std::uint64_t read_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw ParseError("unexpected end of vector data", 0);
  }
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return x;
}

double read_f64(std::istream& in) { return std::bit_cast<double>(read_u64(in)); }

void write_vector(std::ostream& out, const StateVector& v) {
  const auto& s = v.space();
  out.write(kVectorMagic, sizeof kVectorMagic);
  out.put(static_cast<char>(s.statistics()));
  write_u64(out, static_cast<std::uint64_t>(s.particles()));
  write_u64(out, static_cast<std::uint64_t>(s.orbitals()));
  write_u64(out, s.dimension());
  for (const auto& a : v.amplitudes()) {
    write_f64(out, a.real());
    write_f64(out, a.imag());
  }
  if (!out) throw Error("failed to write state vector");
}

StateVector read_vector(std::istream& in) {
  char magic[8];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kVectorMagic, sizeof magic) != 0) {
    throw ParseError("not a FOCKVEC1 state vector", 0);
  }
  const int stat = in.get();
  if (stat != 0 && stat != 1) throw ParseError("bad statistics byte in vector header", 0);
  const auto n = read_u64(in);
  const auto m = read_u64(in);
  const auto dim = read_u64(in);
  if (n > 1u << 20 || m > 1u << 20) throw ParseError("implausible N or M in vector header", 0);
  SpaceDescriptor space(static_cast<Statistics>(stat), static_cast<int>(n), static_cast<int>(m));
  if (space.dimension() != dim) {
    throw ParseError("vector header N_conf " + std::to_string(dim) + " does not match C(N, M) = " +
                         std::to_string(space.dimension()),
                     0);
  }
  std::vector<cplx> amps(dim);
  for (auto& a : amps) {
    const double re = read_f64(in);
    const double im = read_f64(in);
    a = {re, im};
  }
  return StateVector(space, std::move(amps));
}

void save_vector(const std::filesystem::path& path, const StateVector& v) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_vector(out, v);
}

StateVector load_vector(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return read_vector(in);
}

nlohmann::json vector_to_json(const StateVector& v) {
  nlohmann::json amps = nlohmann::json::array();
  for (const auto& a : v.amplitudes()) amps.push_back({a.real(), a.imag()});
  return {{"format", kVectorJsonFormat},
          {"statistics", std::string(to_string(v.space().statistics()))},
          {"N", v.space().particles()},
          {"M", v.space().orbitals()},
          {"amplitudes", std::move(amps)}};
}

StateVector vector_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != kVectorJsonFormat) {
      throw ParseError("unsupported vector format " + j.at("format").dump(), 0);
    }
    const auto stat = j.at("statistics").get<std::string>();
    if (stat != "fermion" && stat != "boson") throw ParseError("bad statistics " + stat, 0);
    SpaceDescriptor space(stat == "fermion" ? Statistics::Fermion : Statistics::Boson,
                          j.at("N").get<int>(), j.at("M").get<int>());
    const auto& amps = j.at("amplitudes");
    std::vector<cplx> out;
    out.reserve(amps.size());
    for (const auto& a : amps) out.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
    return StateVector(space, std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed vector JSON: ") + e.what(), 0);
  }
}

}  // namespace fock::io
