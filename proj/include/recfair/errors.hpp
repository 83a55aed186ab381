// Copyright 2026 the recfair authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recfair {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside the legal domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Structurally incompatible inputs: mismatched lengths or category sets.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Weights that should carry probability mass sum to zero.
class ZeroMassError : public Error {
 public:
  using Error::Error;
};

/// An invalid metric or model configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An entity was assigned two different categories for the same attribute.
class ConflictError : public Error {
 public:
  using Error::Error;
};

/// No candidate split timestamp retains any user.
class EmptySplitError : public Error {
 public:
  using Error::Error;
};

/// An input file contains no data rows.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A malformed input row. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace recfair
