#ifndef FORMALCALC_POLY_HPP
#define FORMALCALC_POLY_HPP

#include "formalcalc/multiindex.hpp"
#include "formalcalc/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace formalcalc {

// Multivariate polynomial over Q in a fixed number of "smooth" variables.
// Canonical form: no zero coefficients are stored, terms are kept in grlex
// order. Two polynomials are equal iff their term maps are equal.
class Poly {
public:
  using TermMap = std::map<MultiIndex, Rational, GrlexLess>;

  explicit Poly(std::size_t arity = 0) : arity_(arity) {}

  static Poly zero(std::size_t arity) { return Poly(arity); }
  static Poly constant(std::size_t arity, const Rational& c);
  /// The coordinate polynomial x_{var} (0-based).
  static Poly variable(std::size_t arity, std::size_t var);
  static Poly monomial(MultiIndex exponents, const Rational& c);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the given monomial (zero if absent).
  Rational coeff(const MultiIndex& m) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  void set_coeff(const MultiIndex& m, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly p);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly pow(unsigned e) const;

  /// Exact partial derivative with respect to variable `var` (0-based).
  Poly diff(std::size_t var) const;

  /// Exact value at a rational point.
  Rational eval(const Point& a) const;

  /// Rewrites the polynomial in shifted variables: the coefficient of
  /// (x-a)^I in the result is the Taylor coefficient of this at a.
  Poly shift(const Point& a) const;

  /// Exact composition p(args); all args must share one arity.
  Poly subst(const std::vector<Poly>& args) const;

  std::string to_string(const std::string& var_prefix = "x") const;

private:
  void check_same_arity(const Poly& rhs) const;

  std::size_t arity_;
  TermMap terms_;
};

} // namespace formalcalc

#endif
