// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fplab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position()` is a byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Structural problems of a piecewise map: its conditions leave a gap,
/// overlap, or are empty.
class MapError : public Error {
 public:
  enum class Kind { coverage_gap, overlap, empty_condition };

  MapError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}

  [[nodiscard]] Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A point lies outside the domain of a map, or an iterate escaped it.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An expression produced a non-finite value or an ill-formed set.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Numeric parameters outside their admissible range (tau <= 0, p < 1, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A sampled check had nothing to evaluate.
class SampleError : public Error {
 public:
  using Error::Error;
};

/// The requested analysis does not apply to the given input.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace fplab
