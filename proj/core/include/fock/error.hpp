// Copyright 2026 The Fockspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fock {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configuration (hole or occupation vector) is malformed for its space.
class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

/// An address J lies outside [1, N_conf].
class AddressError : public Error {
 public:
  using Error::Error;
};

/// (statistics, N, M) does not describe a valid Fock subspace.
class InvalidSpace : public Error {
 public:
  using Error::Error;
};

/// A binomial coefficient or dimension does not fit the 64-bit index type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Two operands live in different spaces.
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

/// Orbital index outside [1, M].
class OrbitalRangeError : public Error {
 public:
  using Error::Error;
};

/// Integral or vector file could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Structural problem in coefficient tables.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Dense oracle requested on a space above its cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

/// Time step could not meet the error tolerance at the minimum step size.
class StepFailure : public Error {
 public:
  StepFailure(const std::string& what, double time) : Error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace fock
