#ifndef FORMALCALC_PARSE_HPP
#define FORMALCALC_PARSE_HPP

#include "formalcalc/fps.hpp"
#include "formalcalc/morphism.hpp"

#include <string>

namespace formalcalc {

// Variable naming scheme for expression parsing: source expressions use
// (u, z), target expressions use (x, y).
struct VarScheme {
  std::string smooth_prefix = "u";
  std::string formal_prefix = "z";
};

/// Parses a single expression over `scheme` variables into an Fps of the
/// given shape. Grammar: expr := term (('+'|'-') term)*;
/// term := factor ('*' factor)*; factor := atom ('^' nat)?;
/// atom := rational | smooth var | formal var | '(' expr ')'.
Fps parse_expression(const std::string& text, const Shape& shape, unsigned order,
                     const VarScheme& scheme = {});

/// Parses a morphism description file:
///   source: n'=<int> k'=<int>
///   target: n=<int> k=<int>
///   x<i> = <expr>   (one per target coordinate)
///   y<j> = <expr>
/// '#' starts a comment; whitespace is insignificant inside expressions.
Morphism parse_morphism(const std::string& text, unsigned order);

/// Canonical text form; parse_morphism(print_morphism(m)) == m.
std::string print_morphism(const Morphism& m);

/// Comma-separated rationals, e.g. "0,1/2,-3".
Point parse_point(const std::string& text);

} // namespace formalcalc

#endif
