#include "formalcalc/poly.hpp"

#include "formalcalc/errors.hpp"

#include <sstream>

namespace formalcalc {

Poly Poly::constant(std::size_t arity, const Rational& c) {
  Poly p(arity);
  if (c != 0) p.terms_[MultiIndex(arity, 0)] = c;
  return p;
}

Poly Poly::variable(std::size_t arity, std::size_t var) {
  if (var >= arity) fail(errc::index_out_of_range, "variable index out of range");
  Poly p(arity);
  p.terms_[unit_index(arity, var)] = 1;
  return p;
}

Poly Poly::monomial(MultiIndex exponents, const Rational& c) {
  Poly p(exponents.size());
  if (c != 0) p.terms_[std::move(exponents)] = c;
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

void Poly::set_coeff(const MultiIndex& m, const Rational& c) {
  if (m.size() != arity_) fail(errc::arity_mismatch, "exponent length != arity");
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

void Poly::check_same_arity(const Poly& rhs) const {
  if (arity_ != rhs.arity_) fail(errc::arity_mismatch, "polynomial arity mismatch");
}

Poly Poly::operator-() const {
  Poly out(arity_);
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_same_arity(rhs);
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_arity(b);
  Poly out(a.arity_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      MultiIndex m(a.arity_);
      for (std::size_t i = 0; i < a.arity_; ++i) m[i] = ma[i] + mb[i];
      Rational prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(std::move(m), prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

Poly operator*(const Rational& c, Poly p) {
  if (c == 0) return Poly(p.arity());
  for (auto& [m, v] : p.terms_) v *= c;
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly out = Poly::constant(arity_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

Poly Poly::diff(std::size_t var) const {
  if (var >= arity_) fail(errc::index_out_of_range, "derivative index out of range");
  Poly out(arity_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    MultiIndex d = m;
    --d[var];
    out.terms_[std::move(d)] = c * m[var];
  }
  return out;
}

Rational Poly::eval(const Point& a) const {
  if (a.size() != arity_) fail(errc::arity_mismatch, "point length != arity");
  Rational out = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < arity_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= a[i];
    out += t;
  }
  return out;
}

Poly Poly::shift(const Point& a) const {
  if (a.size() != arity_) fail(errc::arity_mismatch, "point length != arity");
  // Substitute x_i -> (x_i + a_i); the result's coefficients are then the
  // Taylor coefficients in (x - a).
  std::vector<Poly> args;
  args.reserve(arity_);
  for (std::size_t i = 0; i < arity_; ++i)
    args.push_back(Poly::variable(arity_, i) + Poly::constant(arity_, a[i]));
  return subst(args);
}

Poly Poly::subst(const std::vector<Poly>& args) const {
  if (args.size() != arity_) fail(errc::arity_mismatch, "argument count != arity");
  std::size_t out_arity = args.empty() ? 0 : args[0].arity();
  for (const auto& g : args)
    if (g.arity() != out_arity) fail(errc::arity_mismatch, "argument arities differ");

  // Cache powers of each argument as needed.
  std::vector<std::vector<Poly>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i)
    powers[i].push_back(Poly::constant(out_arity, 1));

  Poly out(out_arity);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(out_arity, c);
    for (std::size_t i = 0; i < arity_; ++i) {
      while (powers[i].size() <= m[i]) powers[i].push_back(powers[i].back() * args[i]);
      if (m[i]) t = t * powers[i][m[i]];
    }
    out += t;
  }
  return out;
}

std::string Poly::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = total_degree(m) > 0;
    if (ac != 1 || !has_vars) {
      os << rational_to_string(ac);
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << var_prefix << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

} // namespace formalcalc
