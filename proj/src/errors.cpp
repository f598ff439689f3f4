#include "formalcalc/errors.hpp"

namespace formalcalc {

const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::formal_order_violation: return "FormalOrderViolation";
    case errc::basepoint_mismatch: return "BasepointMismatch";
    case errc::not_local: return "NotLocal";
    case errc::ill_formed_morphism: return "IllFormedMorphism";
    case errc::singular_differential: return "SingularDifferential";
    case errc::not_constant_rank: return "NotConstantRank";
    case errc::not_standardizable: return "NotStandardizable";
    case errc::not_regular_submersion: return "NotRegularSubmersion";
    case errc::grade_mismatch: return "GradeMismatch";
    case errc::order_too_small: return "OrderTooSmall";
    case errc::fiber_mismatch: return "FiberMismatch";
    case errc::constraint_violation: return "ConstraintViolation";
    case errc::internal_limit: return "InternalLimit";
  }
  return "UnknownError";
}

int errc_exit_code(errc c) {
  switch (c) {
    case errc::parse_error:
      return 2;
    case errc::ill_formed_morphism:
      return 3;
    case errc::internal_limit:
      return 5;
    default:
      return 4; // precondition failures
  }
}

} // namespace formalcalc
