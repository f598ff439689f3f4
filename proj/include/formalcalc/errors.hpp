#ifndef FORMALCALC_ERRORS_HPP
#define FORMALCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace formalcalc {

enum class errc {
  parse_error,
  arity_mismatch,
  index_out_of_range,
  shape_mismatch,
  formal_order_violation,
  basepoint_mismatch,
  not_local,
  ill_formed_morphism,
  singular_differential,
  not_constant_rank,
  not_standardizable,
  not_regular_submersion,
  grade_mismatch,
  order_too_small,
  fiber_mismatch,
  constraint_violation,
  internal_limit,
};

const char* errc_name(errc c);

/// Process exit code for an error class (see the CLI contract).
int errc_exit_code(errc c);

class calc_error : public std::runtime_error {
public:
  calc_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw calc_error(code, what);
}

} // namespace formalcalc

#endif
