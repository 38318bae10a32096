#pragma once

#include <stdexcept>
#include <string>

namespace cgk {

enum class ErrorKind {
  SingularAtT,
  InfiniteHomology,
  InhomogeneousGroup,
  BudgetExceeded,
  InternalInvariantViolation,
  HypothesisUnverified,
  UnsupportedShape,
  UnsupportedGenus,
  EndpointCollision,
  ParseError,
  IncidenceError,
  InvalidInput,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace cgk
