#pragma once

#include <stdexcept>
#include <string>

namespace uncrel {

enum class ErrorKind {
  format,
  domain,
  divergence,
  convergence,
};

/// Base for every error the library raises. The kind drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(ErrorKind::format, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

// Density normalizes to zero or otherwise violates SystemConfig.
class NormalizationError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivergenceError : public Error {
 public:
  explicit DivergenceError(const std::string& what) : Error(ErrorKind::divergence, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(ErrorKind::convergence, what) {}
};

class BracketError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

// Integrand returned NaN or an infinity at an interior node.
class NonFiniteError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::format: return "format";
    case ErrorKind::domain: return "domain";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::convergence: return "convergence";
  }
  return "unknown";
}

}  // namespace uncrel
