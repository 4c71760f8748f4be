#pragma once

#include <stdexcept>
#include <string>

namespace annlab {

// Numeric values double as CLI exit codes.
enum class ErrorKind { Usage = 1, Validation = 2, Resource = 3, DeltaViolation = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  const char* kind_name() const noexcept;

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(ErrorKind::Validation, msg) {}
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DivisionByZero : public ValidationError {
 public:
  DivisionByZero() : ValidationError("division by zero") {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& msg) : Error(ErrorKind::Resource, msg) {}
};

class DeltaViolation : public Error {
 public:
  explicit DeltaViolation(const std::string& msg) : Error(ErrorKind::DeltaViolation, msg) {}
};

inline const char* Error::kind_name() const noexcept {
  switch (kind_) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::DeltaViolation: return "delta-violation";
  }
  return "error";
}

}  // namespace annlab
