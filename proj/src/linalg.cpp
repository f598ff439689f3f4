#include "formalcalc/linalg.hpp"

#include "formalcalc/errors.hpp"

#include <algorithm>

namespace formalcalc {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols_ != b.rows_) fail(errc::shape_mismatch, "matrix product shape mismatch");
  RatMat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rational& v = a(i, l);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += v * b(l, j);
    }
  return out;
}

RatMat RatMat::transposed() const {
  RatMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RatMat RatMat::submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const {
  RatMat out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

namespace {

// Row echelon via fraction-free (Bareiss) elimination with first-nonzero
// pivoting; returns the pivot columns. Works on a copy held by the caller.
std::vector<std::size_t> bareiss_echelon(RatMat& m) {
  std::vector<std::size_t> pivots;
  Rational prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        m(i, j) = (m(row, col) * m(i, j) - m(i, col) * m(row, j)) / prev;
      m(i, col) = 0;
    }
    prev = m(row, col);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Reduced row echelon form (pivot entries 1, pivot columns cleared);
// returns pivot columns.
std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots = bareiss_echelon(m);
  for (std::size_t r = pivots.size(); r-- > 0;) {
    std::size_t col = pivots[r];
    Rational inv = 1 / m(r, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      Rational f = m(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
  }
  return pivots;
}

} // namespace

std::size_t rank(const RatMat& m) {
  RatMat work = m;
  return bareiss_echelon(work).size();
}

Rational determinant(const RatMat& m) {
  if (m.rows() != m.cols()) fail(errc::shape_mismatch, "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  RatMat work = m;
  // Track row-swap sign while running Bareiss; the final pivot is the det.
  int sign = 1;
  Rational prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < work.cols() && row < work.rows(); ++col) {
    std::size_t p = row;
    while (p < work.rows() && work(p, col) == 0) ++p;
    if (p == work.rows()) return 0;
    if (p != row) {
      for (std::size_t j = 0; j < work.cols(); ++j) std::swap(work(p, j), work(row, j));
      sign = -sign;
    }
    for (std::size_t i = row + 1; i < work.rows(); ++i) {
      for (std::size_t j = col + 1; j < work.cols(); ++j)
        work(i, j) = (work(row, col) * work(i, j) - work(i, col) * work(row, j)) / prev;
      work(i, col) = 0;
    }
    prev = work(row, col);
    ++row;
  }
  if (row < work.rows()) return 0;
  return sign > 0 ? prev : Rational(-prev);
}

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) fail(errc::shape_mismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  RatMat work(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work(i, j) = m(i, j);
    work(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots = rref(work);
  // Pivots may spill into the identity block when m is singular; only
  // pivots inside the left block certify invertibility.
  std::size_t left_pivots = 0;
  for (std::size_t p : pivots)
    if (p < n) ++left_pivots;
  if (left_pivots != n)
    fail(errc::singular_differential, "matrix is singular");
  RatMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = work(i, n + j);
  return out;
}

RatMat nullspace(const RatMat& m) {
  RatMat work = m;
  std::vector<std::size_t> pivots = rref(work);
  std::vector<std::size_t> free_cols;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (p < pivots.size() && pivots[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  RatMat out(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    out(free_cols[j], j) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      out(pivots[r], j) = -work(r, free_cols[j]);
  }
  return out;
}

bool solve(const RatMat& m, const std::vector<Rational>& rhs, std::vector<Rational>& x) {
  if (rhs.size() != m.rows()) fail(errc::shape_mismatch, "rhs length != rows");
  RatMat work(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) work(i, j) = m(i, j);
    work(i, m.cols()) = rhs[i];
  }
  std::vector<std::size_t> pivots = rref(work);
  if (!pivots.empty() && pivots.back() == m.cols()) return false; // 0 = 1 row
  x.assign(m.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = work(r, m.cols());
  return true;
}

std::vector<std::size_t> greedy_independent_rows(const RatMat& m,
                                                 const std::vector<std::size_t>& candidates,
                                                 const RatMat& seed, std::size_t want) {
  RatMat stack(seed.rows() + want, m.cols());
  for (std::size_t i = 0; i < seed.rows(); ++i)
    for (std::size_t j = 0; j < seed.cols(); ++j) stack(i, j) = seed(i, j);
  std::size_t base_rank = rank(seed);
  std::size_t kept_count = 0;
  std::vector<std::size_t> kept;
  for (std::size_t cand : candidates) {
    if (kept.size() == want) break;
    for (std::size_t j = 0; j < m.cols(); ++j)
      stack(seed.rows() + kept_count, j) = m(cand, j);
    RatMat trial = stack; // rank() copies anyway, but keep stack intact on reject
    std::vector<std::size_t> rows_now;
    for (std::size_t i = 0; i < seed.rows() + kept_count + 1; ++i) rows_now.push_back(i);
    std::vector<std::size_t> all_cols;
    for (std::size_t j = 0; j < m.cols(); ++j) all_cols.push_back(j);
    if (rank(trial.submatrix(rows_now, all_cols)) == base_rank + kept.size() + 1) {
      kept.push_back(cand);
      ++kept_count;
    }
  }
  if (kept.size() < want)
    fail(errc::internal_limit, "could not select enough independent rows");
  return kept;
}

RatMat PolyMat::eval(const Point& a) const {
  RatMat out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).eval(a);
  return out;
}

namespace {

Poly poly_minor(const PolyMat& m, const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) {
  // Cofactor expansion along the first row; minors here are tiny.
  std::size_t s = rows.size();
  if (s == 0) {
    Poly one = m.rows() && m.cols() ? Poly::constant(m(0, 0).arity(), 1) : Poly::constant(0, 1);
    return one;
  }
  if (s == 1) return m(rows[0], cols[0]);
  Poly out(m(rows[0], cols[0]).arity());
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < s; ++j) {
    const Poly& a = m(rows[0], cols[j]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t l = 0; l < s; ++l)
      if (l != j) sub_cols.push_back(cols[l]);
    Poly term = a * poly_minor(m, sub_rows, sub_cols);
    if (j % 2)
      out -= term;
    else
      out += term;
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t limit) {
  std::size_t s = c.size();
  for (std::size_t i = s; i-- > 0;) {
    if (c[i] + (s - i) < limit) {
      ++c[i];
      for (std::size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

} // namespace

Poly PolyMat::minor_det(const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) const {
  if (rows.size() != cols.size())
    fail(errc::shape_mismatch, "minor requires equal row/column counts");
  return poly_minor(*this, rows, cols);
}

bool PolyMat::all_minors_vanish(std::size_t size) const {
  if (size > rows_ || size > cols_) return true; // no minors of this size
  std::vector<std::size_t> r(size), c(size);
  for (std::size_t i = 0; i < size; ++i) r[i] = i;
  do {
    for (std::size_t i = 0; i < size; ++i) c[i] = i;
    do {
      if (!minor_det(r, c).is_zero()) return false;
    } while (next_combination(c, cols_));
  } while (next_combination(r, rows_));
  return true;
}

} // namespace formalcalc
