#include "psc/errors.hpp"

namespace psc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SemanticError: return "semantic error";
    case ErrorCode::NotAModel: return "not a model";
    case ErrorCode::OrderDomain: return "order domain";
    case ErrorCode::MixedInfinity: return "mixed infinity";
    case ErrorCode::ModeMismatch: return "mode mismatch";
    case ErrorCode::CapExceeded: return "cap exceeded";
    case ErrorCode::WidthExceeded: return "width exceeded";
    case ErrorCode::StrongNegInGen: return "strong negation in generator";
    case ErrorCode::PivotNotInGraph: return "pivot not in graph";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown";
}

}  // namespace psc
