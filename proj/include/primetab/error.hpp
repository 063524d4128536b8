#pragma once

#include <stdexcept>
#include <string>

namespace primetab {

/// Argument outside the mathematical domain of an operation
/// (arccos argument beyond [-1, 1], negative discriminant, n = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation point sits on or too close to a pole or interrupted point.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Dirichlet or power series evaluated outside its region of convergence.
class ConvergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested accuracy cannot be met with the given truncation parameters.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace primetab
