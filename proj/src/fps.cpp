#include "formalcalc/fps.hpp"

#include "formalcalc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace formalcalc {

Fps Fps::constant(std::size_t n, std::size_t k, unsigned order, const Rational& c) {
  return from_poly(Poly::constant(n, c), k, order);
}

Fps Fps::from_poly(const Poly& p, std::size_t k, unsigned order) {
  Fps f(p.arity(), k, order);
  if (!p.is_zero()) f.coeffs_[MultiIndex(k, 0)] = p;
  return f;
}

Fps Fps::smooth_variable(std::size_t n, std::size_t k, unsigned order, std::size_t i) {
  return from_poly(Poly::variable(n, i), k, order);
}

Fps Fps::formal_variable(std::size_t n, std::size_t k, unsigned order, std::size_t j) {
  if (j >= k) fail(errc::index_out_of_range, "formal variable index out of range");
  Fps f(n, k, order);
  if (order >= 1) f.coeffs_[unit_index(k, j)] = Poly::constant(n, 1);
  return f;
}

Poly Fps::coeff(const MultiIndex& j) const {
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? Poly(n_) : it->second;
}

void Fps::set_coeff(const MultiIndex& j, const Poly& p) {
  if (j.size() != k_) fail(errc::shape_mismatch, "formal index length != k");
  if (p.arity() != n_) fail(errc::shape_mismatch, "coefficient arity != n");
  if (total_degree(j) > order_) return;
  if (p.is_zero())
    coeffs_.erase(j);
  else
    coeffs_[j] = p;
}

Fps Fps::truncated(unsigned new_order) const {
  Fps out(n_, k_, new_order);
  out.top_unreliable_ = top_unreliable_;
  for (const auto& [j, p] : coeffs_) {
    if (total_degree(j) > new_order) break;
    out.coeffs_[j] = p;
  }
  return out;
}

void Fps::check_same_shape(const Fps& rhs) const {
  if (n_ != rhs.n_ || k_ != rhs.k_) fail(errc::shape_mismatch, "series shapes differ");
}

Fps Fps::operator-() const {
  Fps out(n_, k_, order_);
  out.top_unreliable_ = top_unreliable_;
  for (const auto& [j, p] : coeffs_) out.coeffs_[j] = -p;
  return out;
}

Fps& Fps::operator+=(const Fps& rhs) {
  check_same_shape(rhs);
  order_ = std::min(order_, rhs.order_);
  top_unreliable_ = top_unreliable_ || rhs.top_unreliable_;
  for (const auto& [j, p] : rhs.coeffs_) {
    if (total_degree(j) > order_) break;
    auto [it, inserted] = coeffs_.try_emplace(j, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  while (!coeffs_.empty() && total_degree(coeffs_.rbegin()->first) > order_)
    coeffs_.erase(std::prev(coeffs_.end()));
  return *this;
}

Fps& Fps::operator-=(const Fps& rhs) { return *this += -rhs; }

Fps operator*(const Fps& a, const Fps& b) {
  a.check_same_shape(b);
  unsigned order = std::min(a.order_, b.order_);
  Fps out(a.n_, a.k_, order);
  out.top_unreliable_ = a.top_unreliable_ || b.top_unreliable_;
  for (const auto& [ja, pa] : a.coeffs_) {
    unsigned da = total_degree(ja);
    if (da > order) break;
    for (const auto& [jb, pb] : b.coeffs_) {
      if (da + total_degree(jb) > order) break;
      MultiIndex j(a.k_);
      for (std::size_t i = 0; i < a.k_; ++i) j[i] = ja[i] + jb[i];
      Poly prod = pa * pb;
      auto [it, inserted] = out.coeffs_.try_emplace(std::move(j), prod);
      if (!inserted) {
        it->second += prod;
        if (it->second.is_zero()) out.coeffs_.erase(it);
      }
    }
  }
  return out;
}

Fps operator*(const Rational& c, Fps f) {
  if (c == 0) return Fps(f.n_, f.k_, f.order_);
  for (auto& [j, p] : f.coeffs_) p = c * p;
  return f;
}

Fps operator*(const Poly& p, Fps f) {
  return Fps::from_poly(p, f.k_formal(), f.order()) * f;
}

Fps Fps::pow(unsigned e) const {
  Fps out = Fps::constant(n_, k_, order_, 1);
  Fps base = *this;
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

bool operator==(const Fps& a, const Fps& b) {
  if (a.n_ != b.n_ || a.k_ != b.k_) return false;
  unsigned order = std::min(a.order_, b.order_);
  return a.truncated(order).coeffs() == b.truncated(order).coeffs();
}

Fps Fps::diff_smooth(std::size_t i) const {
  if (i >= n_) fail(errc::index_out_of_range, "smooth derivative index out of range");
  Fps out(n_, k_, order_);
  out.top_unreliable_ = top_unreliable_;
  for (const auto& [j, p] : coeffs_) {
    Poly d = p.diff(i);
    if (!d.is_zero()) out.coeffs_[j] = std::move(d);
  }
  return out;
}

Fps Fps::diff_formal(std::size_t j) const {
  if (j >= k_) fail(errc::index_out_of_range, "formal derivative index out of range");
  Fps out(n_, k_, order_);
  out.top_unreliable_ = true;
  for (const auto& [idx, p] : coeffs_) {
    if (idx[j] == 0) continue;
    MultiIndex d = idx;
    --d[j];
    out.coeffs_[std::move(d)] = Rational(idx[j]) * p;
  }
  return out;
}

Rational Fps::value(const Point& a) const {
  return coeff(MultiIndex(k_, 0)).eval(a);
}

unsigned Fps::formal_order() const {
  if (coeffs_.empty()) return kInfiniteDegree;
  return total_degree(coeffs_.begin()->first);
}

Jet Fps::to_jet(const Point& a, unsigned jet_order) const {
  if (a.size() != n_) fail(errc::shape_mismatch, "point length != n");
  Point full_base = a;
  full_base.resize(n_ + k_, Rational(0));
  Jet out(full_base, jet_order);
  for (const auto& [j, p] : coeffs_) {
    unsigned dj = total_degree(j);
    if (dj > jet_order) break;
    Poly shifted = p.shift(a);
    for (const auto& [mi, c] : shifted.terms()) {
      if (total_degree(mi) + dj > jet_order) continue;
      MultiIndex m(n_ + k_);
      std::copy(mi.begin(), mi.end(), m.begin());
      std::copy(j.begin(), j.end(), m.begin() + n_);
      out.set_coeff(m, c);
    }
  }
  return out;
}

Fps Fps::subst(const std::vector<Fps>& sx, const std::vector<Fps>& sy) const {
  if (sx.size() != n_ || sy.size() != k_)
    fail(errc::shape_mismatch, "substitution tuple lengths do not match shape");
  std::size_t out_n = 0, out_k = 0;
  unsigned order = order_;
  bool have_shape = false;
  auto take_shape = [&](const Fps& g) {
    if (!have_shape) {
      out_n = g.n_smooth();
      out_k = g.k_formal();
      have_shape = true;
    } else if (g.n_smooth() != out_n || g.k_formal() != out_k) {
      fail(errc::shape_mismatch, "substitution arguments have differing shapes");
    }
    order = std::min(order, g.order());
  };
  for (const auto& g : sx) take_shape(g);
  for (std::size_t j = 0; j < sy.size(); ++j) {
    take_shape(sy[j]);
    if (sy[j].formal_order() < 1)
      fail(errc::formal_order_violation,
           "formal substitution argument " + std::to_string(j + 1) +
               " has a nonzero constant-in-z part");
  }
  if (!have_shape) {
    // No variables at all: the series is a constant.
    return Fps::constant(0, 0, order, coeff(MultiIndex(k_, 0)).coeff(MultiIndex(n_, 0)));
  }

  std::vector<std::vector<Fps>> ypowers(k_);
  Fps one = Fps::constant(out_n, out_k, order, 1);
  for (auto& p : ypowers) p.push_back(one);

  Fps out(out_n, out_k, order);
  for (const auto& [j, p] : coeffs_) {
    if (total_degree(j) > order) break; // each sy_j raises formal order
    // Evaluate the coefficient polynomial on the smooth substitutions.
    Fps t = one;
    {
      Fps acc(out_n, out_k, order);
      std::vector<std::vector<Fps>> xpowers(n_);
      for (auto& xp : xpowers) xp.push_back(one);
      for (const auto& [mi, c] : p.terms()) {
        Fps term = Fps::constant(out_n, out_k, order, c);
        for (std::size_t i = 0; i < n_; ++i) {
          while (xpowers[i].size() <= mi[i]) xpowers[i].push_back(xpowers[i].back() * sx[i]);
          if (mi[i]) term = term * xpowers[i][mi[i]];
        }
        acc += term;
      }
      t = acc;
    }
    for (std::size_t jj = 0; jj < k_; ++jj) {
      while (ypowers[jj].size() <= j[jj]) ypowers[jj].push_back(ypowers[jj].back() * sy[jj]);
      if (j[jj]) t = t * ypowers[jj][j[jj]];
    }
    out += t;
  }
  return out;
}

std::string Fps::to_string(const std::string& smooth_prefix,
                           const std::string& formal_prefix) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, p] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    bool has_formal = total_degree(j) > 0;
    bool simple = p.terms().size() == 1;
    std::string ps = p.to_string(smooth_prefix);
    if (!has_formal) {
      os << ps;
      continue;
    }
    if (p == Poly::constant(n_, 1)) {
      // coefficient 1: print the monomial alone
    } else if (simple) {
      os << ps << "*";
    } else {
      os << "(" << ps << ")*";
    }
    bool first_var = true;
    for (std::size_t jj = 0; jj < k_; ++jj) {
      if (j[jj] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << formal_prefix << (jj + 1);
      if (j[jj] > 1) os << "^" << j[jj];
    }
  }
  return os.str();
}

} // namespace formalcalc
