// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "fock/hamiltonian.hpp"
#include "fock/mixtures.hpp"

/// Integral text format (UTF-8, line oriented, '#' starts a comment).
///
/// Single species:
///
///     STATISTICS FERMION|BOSON
///     N <int>
///     M <int>
///     H k q re [im]          h_kq
///     W k s q l re [im]      W_ksql, coefficient of b†_k b†_s b_l b_q
///
/// Two species:
///
///     STATISTICS MIX FERMION|BOSON FERMION|BOSON
///     NA <int>
///     MA <int>
///     NB <int>
///     MB <int>
///     HA k q re [im]   /  HB k q re [im]
///     WA k s q l re [im]  /  WB k s q l re [im]
///     X k q k' q' re [im]    coefficient of a†_k a_q b†_k' b_q'
///
/// Indices are 1-based; im defaults to 0; repeated entries accumulate;
/// unlisted entries are zero.
namespace fock::io {

using Model = std::variant<HamiltonianSpec, mixtures::MixtureHamiltonian>;

Model parse_model(std::istream& in);
Model load_model(const std::filesystem::path& path);

/// Throws ParseError if the file describes a mixture.
HamiltonianSpec load_integrals(const std::filesystem::path& path);
HamiltonianSpec parse_integrals(std::istream& in);
mixtures::MixtureHamiltonian load_mixture_integrals(const std::filesystem::path& path);

/// Writes every nonzero entry with round-trip precision.
void write_integrals(std::ostream& out, const HamiltonianSpec& spec);
void write_integrals(std::ostream& out, const mixtures::MixtureHamiltonian& h);
void save_integrals(const std::filesystem::path& path, const HamiltonianSpec& spec);
void save_integrals(const std::filesystem::path& path, const mixtures::MixtureHamiltonian& h);

/// Mixture vectors: magic "FOCKMIX1", statistics bytes for A and B, then
/// N_A, M_A, N_B, M_B, N_conf (u64, little-endian) and interleaved re/im
/// doubles in (J_A, J_B) row-major order.
inline constexpr char kMixtureMagic[8] = {'F', 'O', 'C', 'K', 'M', 'I', 'X', '1'};
void write_mixture_vector(std::ostream& out, const mixtures::MixtureStateVector& v);
mixtures::MixtureStateVector read_mixture_vector(std::istream& in);

}  // namespace fock::io
