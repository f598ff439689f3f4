#include "formalcalc/morphism.hpp"

#include "formalcalc/errors.hpp"

#include <algorithm>
#include <string>

namespace formalcalc {

std::string RankTriple::to_string() const {
  return "(" + std::to_string(total) + "," + std::to_string(reduced) + "," +
         std::to_string(formal) + ")";
}

RatMat JacobianBlocks::eval(const Point& b) const {
  RatMat f = F.eval(b), g = G.eval(b), h = H.eval(b);
  RatMat out(f.rows() + h.rows(), f.cols() + g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out(i, j) = f(i, j);
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, f.cols() + j) = g(i, j);
  }
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(f.rows() + i, f.cols() + j) = h(i, j);
  return out;
}

Morphism::Morphism(Shape src, Shape tgt, std::vector<Fps> cx, std::vector<Fps> cy)
    : src_(src), tgt_(tgt), cx_(std::move(cx)), cy_(std::move(cy)) {
  for (const auto& f : cx_) order_ = std::min(order_, f.order());
  for (const auto& f : cy_) order_ = std::min(order_, f.order());
  validate();
}

Morphism Morphism::identity(Shape s, unsigned order) {
  std::vector<Fps> cx, cy;
  for (std::size_t i = 0; i < s.n; ++i)
    cx.push_back(Fps::smooth_variable(s.n, s.k, order, i));
  for (std::size_t j = 0; j < s.k; ++j)
    cy.push_back(Fps::formal_variable(s.n, s.k, order, j));
  return Morphism({s.n, s.k}, s, std::move(cx), std::move(cy));
}

void Morphism::validate() const {
  if (cx_.size() != tgt_.n || cy_.size() != tgt_.k)
    fail(errc::ill_formed_morphism, "component count does not match target shape");
  for (std::size_t i = 0; i < cx_.size(); ++i)
    if (cx_[i].n_smooth() != src_.n || cx_[i].k_formal() != src_.k)
      fail(errc::ill_formed_morphism,
           "smooth component " + std::to_string(i + 1) + " has the wrong source shape");
  for (std::size_t j = 0; j < cy_.size(); ++j) {
    if (cy_[j].n_smooth() != src_.n || cy_[j].k_formal() != src_.k)
      fail(errc::ill_formed_morphism,
           "formal component " + std::to_string(j + 1) + " has the wrong source shape");
    if (cy_[j].formal_order() < 1)
      fail(errc::ill_formed_morphism,
           "formal component " + std::to_string(j + 1) +
               " has a term of formal degree 0");
  }
}

Fps Morphism::pullback(const Fps& f) const {
  if (f.n_smooth() != tgt_.n || f.k_formal() != tgt_.k)
    fail(errc::shape_mismatch, "series shape does not match morphism target");
  Fps out = f.subst(cx_, cy_);
  if (tgt_.n == 0 && tgt_.k == 0 && (src_.n != 0 || src_.k != 0)) {
    // subst() had no arguments to infer the source shape from.
    return Fps::constant(src_.n, src_.k, std::min(order_, f.order()),
                         out.value({}));
  }
  return out;
}

Point Morphism::underlying_point(const Point& b) const {
  if (b.size() != src_.n) fail(errc::shape_mismatch, "point length != source dimension");
  Point out;
  out.reserve(tgt_.n);
  for (const auto& f : cx_) out.push_back(f.value(b));
  return out;
}

JacobianBlocks Morphism::jacobian() const {
  JacobianBlocks jb;
  jb.F = PolyMat(tgt_.n, src_.n, src_.n);
  jb.G = PolyMat(tgt_.n, src_.k, src_.n);
  jb.H = PolyMat(tgt_.k, src_.k, src_.n);
  MultiIndex zero_k(src_.k, 0);
  for (std::size_t i = 0; i < tgt_.n; ++i) {
    Poly red = cx_[i].coeff(zero_k);
    for (std::size_t ip = 0; ip < src_.n; ++ip) jb.F(i, ip) = red.diff(ip);
    for (std::size_t jp = 0; jp < src_.k; ++jp)
      jb.G(i, jp) = cx_[i].coeff(unit_index(src_.k, jp));
  }
  for (std::size_t j = 0; j < tgt_.k; ++j)
    for (std::size_t jp = 0; jp < src_.k; ++jp)
      jb.H(j, jp) = cy_[j].coeff(unit_index(src_.k, jp));
  return jb;
}

RankTriple rank_triple_of(const RatMat& J, std::size_t n, std::size_t k,
                          std::size_t np, std::size_t kp) {
  RankTriple t;
  t.total = rank(J);
  std::vector<std::size_t> top, left, bottom, right;
  for (std::size_t i = 0; i < n; ++i) top.push_back(i);
  for (std::size_t j = 0; j < np; ++j) left.push_back(j);
  for (std::size_t i = 0; i < k; ++i) bottom.push_back(n + i);
  for (std::size_t j = 0; j < kp; ++j) right.push_back(np + j);
  t.reduced = rank(J.submatrix(top, left));
  t.formal = rank(J.submatrix(bottom, right));
  return t;
}

RankTriple Morphism::rank_at(const Point& b) const {
  if (b.size() != src_.n) fail(errc::shape_mismatch, "point length != source dimension");
  return rank_triple_of(jacobian().eval(b), tgt_.n, tgt_.k, src_.n, src_.k);
}

DifferentialMatrix Morphism::differential_at(const Point& b) const {
  if (b.size() != src_.n) fail(errc::shape_mismatch, "point length != source dimension");
  DifferentialMatrix d;
  d.entries = jacobian().eval(b);
  d.src_n = src_.n;
  d.src_k = src_.k;
  d.tgt_n = tgt_.n;
  d.tgt_k = tgt_.k;
  return d;
}

ClassifyFlags Morphism::classify_at(const Point& b) const {
  RankTriple t = rank_at(b);
  ClassifyFlags f;
  f.immersion = t.total == src_.n + src_.k;
  f.submersion = t.total == tgt_.n + tgt_.k;
  f.regular = t.total == t.reduced + t.formal;
  f.bijective_differential = f.immersion && f.submersion;
  return f;
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.cx_ == b.cx_ && a.cy_ == b.cy_;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.tgt() != outer.src())
    fail(errc::shape_mismatch, "composition target/source shapes differ");
  std::vector<Fps> cx, cy;
  for (const auto& f : outer.cx()) cx.push_back(inner.pullback(f));
  for (const auto& f : outer.cy()) cy.push_back(inner.pullback(f));
  return Morphism(inner.src(), outer.tgt(), std::move(cx), std::move(cy));
}

} // namespace formalcalc
