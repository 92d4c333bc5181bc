#pragma once

#include <stdexcept>
#include <string>

namespace ifm {

enum class ErrorKind {
  OutOfRange,
  SumViolation,
  ZeroP,
  NotDominated,
  DimensionMismatch,
  BadPath,
  BudgetExceeded,
  ParseError,
  ValidationError,
  Usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ifm
