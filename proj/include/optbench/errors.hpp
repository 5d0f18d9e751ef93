#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace optbench {

/// Input outside the mathematical domain of a model (σ ≤ 0, T ≤ 0, log of zero).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Structurally invalid argument (zero counts, empty inputs).
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced a non-finite intermediate.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A value parsed correctly but violates a type invariant.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A power source cannot be read on this host.
class SourceUnavailable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace optbench
