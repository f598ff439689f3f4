#ifndef FORMALCALC_LINALG_HPP
#define FORMALCALC_LINALG_HPP

#include "formalcalc/poly.hpp"
#include "formalcalc/rational.hpp"

#include <cstddef>
#include <vector>

namespace formalcalc {

// Dense matrix over Q. Small sizes only; all elimination routines use
// deterministic first-nonzero pivoting so results are reproducible.
class RatMat {
public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend bool operator==(const RatMat& a, const RatMat& b) = default;

  RatMat transposed() const;
  RatMat submatrix(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Exact rank via fraction-free (Bareiss) elimination.
std::size_t rank(const RatMat& m);

Rational determinant(const RatMat& m);

/// Inverse of a square nonsingular matrix; throws singular_differential
/// if the matrix is singular.
RatMat inverse(const RatMat& m);

/// Basis of the right null space {v : m v = 0}, one column per basis vector,
/// in the deterministic order induced by the free columns of the RREF.
RatMat nullspace(const RatMat& m);

/// One solution of m x = rhs (least free variables set to zero);
/// returns false if the system is inconsistent.
bool solve(const RatMat& m, const std::vector<Rational>& rhs, std::vector<Rational>& x);

/// Greedy lexicographically-first independent subset selection: scans the
/// candidate rows in order, keeping each row of `m` that enlarges the span
/// of the rows kept so far (on top of the rows in `seed`), until `want`
/// rows are kept. Returns the kept indices; throws internal_limit if fewer
/// than `want` independent rows exist.
std::vector<std::size_t> greedy_independent_rows(const RatMat& m,
                                                 const std::vector<std::size_t>& candidates,
                                                 const RatMat& seed, std::size_t want);

// Matrix of polynomials (symbolic Jacobian blocks).
class PolyMat {
public:
  PolyMat() : rows_(0), cols_(0) {}
  PolyMat(std::size_t rows, std::size_t cols, std::size_t arity)
      : rows_(rows), cols_(cols), data_(rows * cols, Poly(arity)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMat eval(const Point& a) const;
  Poly minor_det(const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) const;

  /// True iff every minor of size `size` is the zero polynomial
  /// (i.e. the symbolic rank is < size everywhere).
  bool all_minors_vanish(std::size_t size) const;

  friend bool operator==(const PolyMat& a, const PolyMat& b) = default;

private:
  std::size_t rows_, cols_;
  std::vector<Poly> data_;
};

} // namespace formalcalc

#endif
