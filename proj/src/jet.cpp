#include "formalcalc/jet.hpp"

#include "formalcalc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace formalcalc {

Jet Jet::constant(Point basepoint, unsigned order, const Rational& c) {
  Jet j(std::move(basepoint), order);
  if (c != 0) j.coeffs_[MultiIndex(j.arity(), 0)] = c;
  return j;
}

Jet Jet::coordinate(const Point& basepoint, unsigned order, std::size_t var) {
  if (var >= basepoint.size()) fail(errc::index_out_of_range, "coordinate index out of range");
  Jet j(basepoint, order);
  if (basepoint[var] != 0) j.coeffs_[MultiIndex(j.arity(), 0)] = basepoint[var];
  if (order >= 1) j.coeffs_[unit_index(j.arity(), var)] = 1;
  return j;
}

Rational Jet::coeff(const MultiIndex& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void Jet::set_coeff(const MultiIndex& m, const Rational& c) {
  if (m.size() != arity()) fail(errc::arity_mismatch, "exponent length != arity");
  if (total_degree(m) > order_) return;
  if (c == 0)
    coeffs_.erase(m);
  else
    coeffs_[m] = c;
}

unsigned Jet::min_degree() const {
  if (coeffs_.empty()) return kInfiniteDegree;
  return total_degree(coeffs_.begin()->first);
}

Jet Jet::truncated(unsigned new_order) const {
  Jet out(base_, new_order);
  for (const auto& [m, c] : coeffs_) {
    if (total_degree(m) > new_order) break; // grlex order: all later ones too
    out.coeffs_[m] = c;
  }
  return out;
}

Jet Jet::homogeneous_part(unsigned degree) const {
  Jet out(base_, order_);
  for (const auto& [m, c] : coeffs_)
    if (total_degree(m) == degree) out.coeffs_[m] = c;
  return out;
}

Jet Jet::operator-() const {
  Jet out(base_, order_);
  for (const auto& [m, c] : coeffs_) out.coeffs_[m] = -c;
  return out;
}

namespace {
void check_compatible(const Jet& a, const Jet& b) {
  if (a.arity() != b.arity() || a.basepoint() != b.basepoint())
    fail(errc::basepoint_mismatch, "jet basepoints differ");
}
} // namespace

Jet& Jet::operator+=(const Jet& rhs) {
  check_compatible(*this, rhs);
  order_ = std::min(order_, rhs.order_);
  for (const auto& [m, c] : rhs.coeffs_) {
    if (total_degree(m) > order_) break;
    auto [it, inserted] = coeffs_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  // rhs may have lowered the order below previously stored degrees.
  while (!coeffs_.empty() && total_degree(coeffs_.rbegin()->first) > order_)
    coeffs_.erase(std::prev(coeffs_.end()));
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) { return *this += -rhs; }

Jet operator*(const Rational& c, Jet j) {
  if (c == 0) return Jet(j.basepoint(), j.order());
  for (auto& [m, v] : j.coeffs_) v *= c;
  return j;
}

Jet jet_mul(const Jet& a, const Jet& b) {
  check_compatible(a, b);
  unsigned order = std::min(a.order(), b.order());
  Jet out(a.basepoint(), order);
  std::size_t n = a.arity();
  for (const auto& [ma, ca] : a.coeffs()) {
    unsigned da = total_degree(ma);
    if (da > order) break;
    for (const auto& [mb, cb] : b.coeffs()) {
      if (da + total_degree(mb) > order) break;
      MultiIndex m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      out.set_coeff(m, out.coeff(m) + ca * cb);
    }
  }
  return out;
}

Jet Jet::pow(unsigned e) const {
  Jet out = Jet::constant(base_, order_, 1);
  Jet base = *this;
  while (e) {
    if (e & 1) out = jet_mul(out, base);
    e >>= 1;
    if (e) base = jet_mul(base, base);
  }
  return out;
}

bool operator==(const Jet& a, const Jet& b) {
  if (a.arity() != b.arity() || a.basepoint() != b.basepoint()) return false;
  unsigned order = std::min(a.order(), b.order());
  return a.truncated(order).coeffs() == b.truncated(order).coeffs();
}

Jet jet_subst(const Jet& f, const std::vector<Jet>& args) {
  if (args.size() != f.arity()) fail(errc::arity_mismatch, "argument count != jet arity");
  unsigned order = f.order();
  Point base;
  if (!args.empty()) {
    base = args[0].basepoint();
    for (const auto& g : args) {
      if (g.basepoint() != base) fail(errc::basepoint_mismatch, "argument basepoints differ");
      order = std::min(order, g.order());
    }
  }
  // Local homomorphism condition: arg values must hit f's basepoint so that
  // the shifted arguments have zero constant term.
  std::vector<Jet> shifted;
  shifted.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].value() != f.basepoint()[i])
      fail(errc::not_local, "argument value does not match jet basepoint");
    Jet s = args[i].truncated(order);
    s.set_coeff(MultiIndex(s.arity(), 0), 0);
    shifted.push_back(std::move(s));
  }

  std::vector<std::vector<Jet>> powers(args.size());
  Jet one = Jet::constant(base, order, 1);
  for (auto& p : powers) p.push_back(one);

  Jet out(base, order);
  for (const auto& [m, c] : f.coeffs()) {
    if (total_degree(m) > order) break;
    Jet t = Jet::constant(base, order, c);
    for (std::size_t i = 0; i < args.size(); ++i) {
      while (powers[i].size() <= m[i])
        powers[i].push_back(jet_mul(powers[i].back(), shifted[i]));
      if (m[i]) t = jet_mul(t, powers[i][m[i]]);
    }
    out += t;
  }
  return out;
}

std::string Jet::to_string(const std::vector<std::string>& var_names) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
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
    for (std::size_t i = 0; i < arity(); ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      if (base_[i] == 0)
        os << var_names[i];
      else if (base_[i] < 0)
        os << "(" << var_names[i] << "+" << rational_to_string(Rational(-base_[i])) << ")";
      else
        os << "(" << var_names[i] << "-" << rational_to_string(base_[i]) << ")";
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

} // namespace formalcalc
