#ifndef FORMALCALC_JET_HPP
#define FORMALCALC_JET_HPP

#include "formalcalc/multiindex.hpp"
#include "formalcalc/poly.hpp"
#include "formalcalc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace formalcalc {

// Truncated element of a formal stalk at a rational basepoint: a polynomial
// in the shifted variables (x - a), kept modulo total degree > order. The
// constant coefficient is the value at the basepoint, and the least total
// degree with a nonzero coefficient measures membership in the powers of the
// maximal ideal (up to truncation).
class Jet {
public:
  using CoeffMap = std::map<MultiIndex, Rational, GrlexLess>;

  Jet() : order_(0) {}
  Jet(Point basepoint, unsigned order)
      : base_(std::move(basepoint)), order_(order) {}

  static Jet constant(Point basepoint, unsigned order, const Rational& c);
  /// The jet of the coordinate function x_{var}: value a_{var} plus (x-a)_{var}.
  static Jet coordinate(const Point& basepoint, unsigned order, std::size_t var);

  std::size_t arity() const { return base_.size(); }
  const Point& basepoint() const { return base_; }
  unsigned order() const { return order_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(const MultiIndex& m) const;
  void set_coeff(const MultiIndex& m, const Rational& c);
  /// Value at the basepoint (the constant coefficient).
  Rational value() const { return coeff(MultiIndex(base_.size(), 0)); }

  /// Least total degree with nonzero coefficient; kInfiniteDegree if zero.
  unsigned min_degree() const;
  static constexpr unsigned kInfiniteDegree = ~0u;

  /// Drops all coefficients of total degree > new_order.
  Jet truncated(unsigned new_order) const;
  /// The homogeneous part of the given total degree.
  Jet homogeneous_part(unsigned degree) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Rational& c, Jet j);

  Jet pow(unsigned e) const;

  /// Equality modulo total degree > min(order(), rhs.order()).
  friend bool operator==(const Jet& a, const Jet& b);

  std::string to_string(const std::vector<std::string>& var_names) const;

private:
  Point base_;
  unsigned order_;
  CoeffMap coeffs_;
};

/// Exact product modulo total degree > min order. Basepoints must match.
Jet jet_mul(const Jet& a, const Jet& b);

/// Composition f(args): substitutes args[i] for the i-th coordinate of f.
/// Each args[i] must be a jet at a common basepoint whose value equals the
/// i-th basepoint coordinate of f (local homomorphism condition).
Jet jet_subst(const Jet& f, const std::vector<Jet>& args);

} // namespace formalcalc

#endif
