#ifndef FORMALCALC_FPS_HPP
#define FORMALCALC_FPS_HPP

#include "formalcalc/jet.hpp"
#include "formalcalc/multiindex.hpp"
#include "formalcalc/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace formalcalc {

inline constexpr unsigned kDefaultOrder = 8;

// Truncated formal power series in the formal variables with polynomial
// coefficients in the smooth variables: an element of O(N^(k)) modulo formal
// degree > order. Coefficients are indexed by the formal multi-index J; no
// zero coefficient polynomial is stored.
//
// `order` is the effective order of validity of the value: operations
// combining two series produce the minimum of the input orders, so equality
// is only meaningful coefficientwise up to the common truncation order.
class Fps {
public:
  using CoeffMap = std::map<MultiIndex, Poly, GrlexLess>;

  Fps() : n_(0), k_(0), order_(kDefaultOrder) {}
  Fps(std::size_t n_smooth, std::size_t k_formal, unsigned order)
      : n_(n_smooth), k_(k_formal), order_(order) {}

  static Fps zero(std::size_t n, std::size_t k, unsigned order) { return Fps(n, k, order); }
  static Fps constant(std::size_t n, std::size_t k, unsigned order, const Rational& c);
  static Fps from_poly(const Poly& p, std::size_t k, unsigned order);
  /// The smooth coordinate x_i (0-based).
  static Fps smooth_variable(std::size_t n, std::size_t k, unsigned order, std::size_t i);
  /// The formal coordinate y_j (0-based).
  static Fps formal_variable(std::size_t n, std::size_t k, unsigned order, std::size_t j);

  std::size_t n_smooth() const { return n_; }
  std::size_t k_formal() const { return k_; }
  unsigned order() const { return order_; }
  /// Set when the top formal degree is no longer trustworthy (after a
  /// formal-variable derivative). Propagates through arithmetic.
  bool top_degree_unreliable() const { return top_unreliable_; }

  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient polynomial of y^J (zero polynomial if absent).
  Poly coeff(const MultiIndex& j) const;
  void set_coeff(const MultiIndex& j, const Poly& p);

  Fps truncated(unsigned new_order) const;

  Fps operator-() const;
  Fps& operator+=(const Fps& rhs);
  Fps& operator-=(const Fps& rhs);
  friend Fps operator+(Fps a, const Fps& b) { return a += b; }
  friend Fps operator-(Fps a, const Fps& b) { return a -= b; }
  friend Fps operator*(const Fps& a, const Fps& b);
  friend Fps operator*(const Rational& c, Fps f);
  friend Fps operator*(const Poly& p, Fps f);

  Fps pow(unsigned e) const;

  /// Equality coefficientwise up to the common truncation order.
  friend bool operator==(const Fps& a, const Fps& b);

  /// Coefficientwise smooth partial derivative.
  Fps diff_smooth(std::size_t i) const;
  /// Formal-variable derivative. Keeps the nominal order but marks the top
  /// degree unreliable: degree order+1 terms of the untruncated series would
  /// contribute at degree `order`.
  Fps diff_formal(std::size_t j) const;

  /// Value at a smooth point: the J = 0 coefficient evaluated at a.
  Rational value(const Point& a) const;

  /// Least |J| with nonzero coefficient; kInfiniteDegree if zero.
  unsigned formal_order() const;
  static constexpr unsigned kInfiniteDegree = Jet::kInfiniteDegree;

  /// Taylor expansion at the smooth basepoint a: a jet in (x - a, y) of
  /// total degree <= jet_order (exact for polynomial coefficients as long as
  /// jet_order <= order in the formal directions).
  Jet to_jet(const Point& a, unsigned jet_order) const;

  /// Exact substitution: smooth variables become sx, formal variables become
  /// sy; all sx/sy share one shape, every sy_j must have formal order >= 1.
  Fps subst(const std::vector<Fps>& sx, const std::vector<Fps>& sy) const;

  std::string to_string(const std::string& smooth_prefix = "x",
                        const std::string& formal_prefix = "y") const;

private:
  void check_same_shape(const Fps& rhs) const;

  std::size_t n_, k_;
  unsigned order_;
  bool top_unreliable_ = false;
  CoeffMap coeffs_;
};

} // namespace formalcalc

#endif
