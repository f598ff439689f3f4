#include "formalcalc/jetmap.hpp"

#include "formalcalc/errors.hpp"

#include <algorithm>
#include <string>

namespace formalcalc {

namespace {

Point padded(const Point& base, std::size_t k) {
  Point full = base;
  full.resize(base.size() + k, Rational(0));
  return full;
}

// Every monomial of a formal component must involve a formal variable; this
// is what makes the map respect the formal filtration on both sides.
bool respects_filtration(const Jet& c, std::size_t n, std::size_t k) {
  for (const auto& [m, v] : c.coeffs()) {
    unsigned zdeg = 0;
    for (std::size_t j = 0; j < k; ++j) zdeg += m[n + j];
    if (zdeg == 0) return false;
  }
  return true;
}

} // namespace

JetMap::JetMap(Shape src, Shape tgt, Point src_base, Point tgt_base,
               std::vector<Jet> components, unsigned order)
    : src_(src), tgt_(tgt), src_base_(std::move(src_base)),
      tgt_base_(std::move(tgt_base)), order_(order), comps_(std::move(components)) {
  if (src_base_.size() != src_.n || tgt_base_.size() != tgt_.n)
    fail(errc::shape_mismatch, "basepoint length does not match shape");
  if (comps_.size() != tgt_.n + tgt_.k)
    fail(errc::shape_mismatch, "component count does not match target shape");
  Point full = padded(src_base_, src_.k);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].basepoint() != full)
      fail(errc::basepoint_mismatch,
           "component " + std::to_string(i + 1) + " sits at the wrong basepoint");
    comps_[i] = comps_[i].truncated(std::min(order_, comps_[i].order()));
    order_ = std::min(order_, comps_[i].order());
  }
  for (std::size_t i = 0; i < tgt_.n; ++i)
    if (comps_[i].value() != tgt_base_[i])
      fail(errc::not_local, "smooth component " + std::to_string(i + 1) +
                                " does not hit the target basepoint");
  for (std::size_t j = 0; j < tgt_.k; ++j)
    if (!respects_filtration(comps_[tgt_.n + j], src_.n, src_.k))
      fail(errc::not_local, "formal component " + std::to_string(j + 1) +
                                " has a term of formal degree 0");
}

JetMap JetMap::identity(Shape s, const Point& base, unsigned order) {
  Point full = padded(base, s.k);
  std::vector<Jet> comps;
  for (std::size_t i = 0; i < s.n + s.k; ++i)
    comps.push_back(Jet::coordinate(full, order, i));
  return JetMap(s, s, base, base, std::move(comps), order);
}

Point JetMap::full_src_basepoint() const { return padded(src_base_, src_.k); }

Jet JetMap::pull(const Jet& g) const {
  if (g.basepoint() != padded(tgt_base_, tgt_.k))
    fail(errc::basepoint_mismatch, "jet does not sit at the target basepoint");
  return jet_subst(g.truncated(std::min(order_, g.order())), comps_);
}

RatMat JetMap::linear_part() const {
  std::size_t sn = src_.n + src_.k;
  RatMat out(comps_.size(), sn);
  for (std::size_t i = 0; i < comps_.size(); ++i)
    for (std::size_t j = 0; j < sn; ++j)
      out(i, j) = comps_[i].coeff(unit_index(sn, j));
  return out;
}

JetMap JetMap::truncated(unsigned new_order) const {
  std::vector<Jet> comps;
  for (const auto& c : comps_) comps.push_back(c.truncated(new_order));
  return JetMap(src_, tgt_, src_base_, tgt_base_, std::move(comps),
                std::min(order_, new_order));
}

bool operator==(const JetMap& a, const JetMap& b) {
  return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.src_base_ == b.src_base_ &&
         a.tgt_base_ == b.tgt_base_ && a.comps_ == b.comps_;
}

JetMap compose(const JetMap& outer, const JetMap& inner) {
  if (inner.tgt() != outer.src() || inner.tgt_basepoint() != outer.src_basepoint())
    fail(errc::basepoint_mismatch, "composition source/target data differ");
  unsigned order = std::min(outer.order(), inner.order());
  std::vector<Jet> comps;
  for (const auto& c : outer.components())
    comps.push_back(jet_subst(c.truncated(order), inner.components()));
  return JetMap(inner.src(), outer.tgt(), inner.src_basepoint(),
                outer.tgt_basepoint(), std::move(comps), order);
}

JetMap morphism_to_jetmap(const Morphism& m, const Point& b, unsigned order) {
  std::vector<Jet> comps;
  for (const auto& f : m.cx()) comps.push_back(f.to_jet(b, order));
  for (const auto& f : m.cy()) comps.push_back(f.to_jet(b, order));
  return JetMap(m.src(), m.tgt(), b, m.underlying_point(b), std::move(comps), order);
}

JetMap jet_invert(const JetMap& j, unsigned order) {
  if (j.src().n != j.tgt().n || j.src().k != j.tgt().k)
    fail(errc::shape_mismatch, "only square shapes can be inverted");
  unsigned ord = std::min(order, j.order());
  RatMat M = inverse(j.linear_part()); // throws if the differential is singular

  std::size_t N = j.src().n + j.src().k;
  Point src_full = j.full_src_basepoint();
  Point tgt_full = j.tgt_basepoint();
  tgt_full.resize(N, Rational(0));

  // First-order inverse: affine map with linear part M.
  std::vector<Jet> comps;
  for (std::size_t i = 0; i < N; ++i) {
    Jet c = Jet::constant(tgt_full, ord, src_full[i]);
    for (std::size_t l = 0; l < N; ++l) {
      if (M(i, l) == 0) continue;
      Jet shifted = Jet::coordinate(tgt_full, ord, l);
      shifted -= Jet::constant(tgt_full, ord, tgt_full[l]);
      c += M(i, l) * shifted;
    }
    comps.push_back(std::move(c));
  }

  JetMap jt = j.truncated(ord);
  // Degree-by-degree correction: if j o inv = id + E with E of exact degree
  // s, replacing inv by inv - M E cancels E without touching lower degrees.
  for (unsigned s = 2; s <= ord; ++s) {
    JetMap inv(j.tgt(), j.src(), j.tgt_basepoint(), j.src_basepoint(), comps, ord);
    JetMap check = compose(jt, inv);
    std::vector<Jet> err;
    for (std::size_t i = 0; i < N; ++i)
      err.push_back(check.component(i).homogeneous_part(s));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t l = 0; l < N; ++l)
        if (M(i, l) != 0) comps[i] -= M(i, l) * err[l];
  }
  return JetMap(j.tgt(), j.src(), j.tgt_basepoint(), j.src_basepoint(),
                std::move(comps), ord);
}

} // namespace formalcalc
