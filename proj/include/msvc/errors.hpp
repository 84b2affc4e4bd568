#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace msvc {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error object.
class Error : public std::runtime_error {
 public:
  Error(std::string_view kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  std::string_view kind() const noexcept { return kind_; }

 private:
  std::string_view kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message) : Error("invalid-input", message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message) : Error("precondition", message) {}
};

/// Instance too large for an exhaustive method (e.g. brute force over n!).
class SizeLimitExceeded : public Error {
 public:
  explicit SizeLimitExceeded(const std::string& message) : Error("size-limit", message) {}
};

/// Structural parameter (vertex cover / clique modulator size) above the cap.
class ParameterExceeded : public Error {
 public:
  explicit ParameterExceeded(const std::string& message) : Error("parameter-exceeded", message) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message) : Error("budget-exceeded", message) {}
};

class ArithmeticOverflow : public Error {
 public:
  explicit ArithmeticOverflow(const std::string& message) : Error("overflow", message) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("parse-error", "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A self-check failed. Always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message) : Error("internal", message) {}
};

}  // namespace msvc
