#include "formalcalc/rational.hpp"

#include "formalcalc/errors.hpp"

#include <sstream>

namespace formalcalc {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  auto bad = [&] { fail(errc::parse_error, "invalid rational literal '" + s + "'"); };
  if (s.empty()) bad();
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational(); // unreachable
}

std::string point_to_string(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += rational_to_string(p[i]);
  }
  return out;
}

} // namespace formalcalc
