// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "fock/fockspace.hpp"

/// State vector serialization.
///
/// Binary layout, all fields little-endian:
///
///     offset  size  field
///     0       8     magic "FOCKVEC1"
///     8       1     statistics (0 fermion, 1 boson)
///     9       8     N   (u64)
///     17      8     M   (u64)
///     25      8     N_conf (u64)
///     33      16*N_conf  interleaved re, im (IEEE-754 binary64)
///
/// The JSON form is `{"format": "fockvec-json-1", "statistics": ..., "N": ...,
/// "M": ..., "amplitudes": [[re, im], ...]}` and round-trips exactly.
namespace fock::io {

inline constexpr char kVectorMagic[8] = {'F', 'O', 'C', 'K', 'V', 'E', 'C', '1'};
inline constexpr const char* kVectorJsonFormat = "fockvec-json-1";

void write_vector(std::ostream& out, const StateVector& v);
StateVector read_vector(std::istream& in);
void save_vector(const std::filesystem::path& path, const StateVector& v);
StateVector load_vector(const std::filesystem::path& path);

nlohmann::json vector_to_json(const StateVector& v);
StateVector vector_from_json(const nlohmann::json& j);

// Little-endian primitives shared with the mixture vector format.
void write_u64(std::ostream& out, std::uint64_t x);
void write_f64(std::ostream& out, double x);
std::uint64_t read_u64(std::istream& in);
double read_f64(std::istream& in);

}  // namespace fock::io
