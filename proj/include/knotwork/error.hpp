#pragma once

#include <stdexcept>
#include <string>

namespace knotwork {

/// Failure categories. They map one-to-one onto CLI exit codes.
enum class ErrorKind {
  parse = 1,         // malformed input text or file
  precondition = 2,  // well-formed input violating an operation contract
  budget = 3,        // degree / precision / size budget exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::precondition, what) {}
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(ErrorKind::budget, what) {}
};

// Raised when interval refinement cannot separate a pivot from zero.
class SingularError : public PreconditionError {
 public:
  explicit SingularError(const std::string& what) : PreconditionError(what) {}
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::budget: return "budget";
  }
  return "error";
}

}  // namespace knotwork
