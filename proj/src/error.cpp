#include "cgk/error.hpp"

namespace cgk {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::SingularAtT: return "SingularAtT";
    case ErrorKind::InfiniteHomology: return "InfiniteHomology";
    case ErrorKind::InhomogeneousGroup: return "InhomogeneousGroup";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::HypothesisUnverified: return "HypothesisUnverified";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::UnsupportedGenus: return "UnsupportedGenus";
    case ErrorKind::EndpointCollision: return "EndpointCollision";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IncidenceError: return "IncidenceError";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace cgk
