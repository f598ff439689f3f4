#ifndef FORMALCALC_RATIONAL_HPP
#define FORMALCALC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace formalcalc {

// Exact rational scalar. cpp_rational keeps gcd(|num|, den) = 1, den > 0 and
// represents zero as 0/1, which is exactly the canonical form we need.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using Point = std::vector<Rational>;

/// Renders as "p" for integers and "p/q" otherwise.
std::string rational_to_string(const Rational& r);

/// Parses "p", "-p", "p/q". Throws calc_error(parse_error) on bad input.
Rational rational_from_string(const std::string& s);

std::string point_to_string(const Point& p);

} // namespace formalcalc

#endif
