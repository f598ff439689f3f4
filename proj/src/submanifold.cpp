#include "formalcalc/submanifold.hpp"

#include "formalcalc/errors.hpp"

#include <algorithm>
#include <string>

namespace formalcalc {

void SliceSpec::validate() const {
  if (n_prime > n || r > n - n_prime)
    fail(errc::constraint_violation, "slice needs r <= n - n'");
  if (r > k_prime) fail(errc::constraint_violation, "slice needs r <= k'");
  if (k_prime - r > k) fail(errc::constraint_violation, "slice needs k' - r <= k");
}

Morphism make_slice(const SliceSpec& spec, unsigned order) {
  spec.validate();
  std::size_t np = spec.n_prime, kp = spec.k_prime, n = spec.n, k = spec.k,
              r = spec.r;
  std::vector<Fps> cx, cy;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < np)
      cx.push_back(Fps::smooth_variable(np, kp, order, i));
    else if (i < n - r)
      cx.push_back(Fps::zero(np, kp, order));
    else
      cx.push_back(Fps::formal_variable(np, kp, order, i - (n - r)));
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (j < kp - r)
      cy.push_back(Fps::formal_variable(np, kp, order, r + j));
    else
      cy.push_back(Fps::zero(np, kp, order));
  }
  return Morphism({np, kp}, {n, k}, std::move(cx), std::move(cy));
}

Fps slice_pullback(const SliceSpec& spec, const Fps& f) {
  spec.validate();
  if (f.n_smooth() != spec.n || f.k_formal() != spec.k)
    fail(errc::shape_mismatch, "series shape does not match the slice target");
  std::size_t np = spec.n_prime, kp = spec.k_prime, n = spec.n, r = spec.r;
  Fps out(np, kp, f.order());
  // Taylor expansion along the sliced-off x-variables: the coefficient of
  // z^(I,J) is (1/I!) d^I f_J restricted to the slice, which for polynomial
  // coefficients is plain coefficient extraction: x^alpha y^J contributes
  // iff alpha vanishes on the zeroed block and J on the zeroed y-tail.
  for (const auto& [J, p] : f.coeffs()) {
    bool tail_ok = true;
    for (std::size_t j = kp - r; j < spec.k; ++j)
      if (J[j]) tail_ok = false;
    if (!tail_ok) continue;
    for (const auto& [alpha, c] : p.terms()) {
      bool mid_ok = true;
      for (std::size_t i = np; i < n - r; ++i)
        if (alpha[i]) mid_ok = false;
      if (!mid_ok) continue;
      MultiIndex head(np);
      for (std::size_t i = 0; i < np; ++i) head[i] = alpha[i];
      MultiIndex zexp(kp, 0);
      for (std::size_t i = 0; i < r; ++i) zexp[i] = alpha[n - r + i];
      for (std::size_t j = 0; j < kp - r; ++j) zexp[r + j] = J[j];
      if (total_degree(zexp) > f.order()) continue;
      Poly coeff = out.coeff(zexp);
      coeff += Poly::monomial(head, c);
      out.set_coeff(zexp, coeff);
    }
  }
  return out;
}

Fps borel_preimage(const SliceSpec& spec, const Fps& g, unsigned order) {
  spec.validate();
  if (g.n_smooth() != spec.n_prime || g.k_formal() != spec.k_prime)
    fail(errc::shape_mismatch, "series shape does not match the slice source");
  std::size_t np = spec.n_prime, kp = spec.k_prime, n = spec.n, r = spec.r;
  Fps out(n, spec.k, order);
  // Exact section of the Taylor expansion: each z-coefficient reassembles as
  // a polynomial in the sliced-off x-variables times a y-monomial.
  for (const auto& [zexp, p] : g.coeffs()) {
    MultiIndex J(spec.k, 0);
    for (std::size_t j = 0; j < kp - r; ++j) J[j] = zexp[r + j];
    Poly q(n);
    for (const auto& [head, c] : p.terms()) {
      MultiIndex alpha(n, 0);
      for (std::size_t i = 0; i < np; ++i) alpha[i] = head[i];
      for (std::size_t i = 0; i < r; ++i) alpha[n - r + i] = zexp[i];
      q += Poly::monomial(alpha, c);
    }
    if (total_degree(J) > order) continue;
    Poly coeff = out.coeff(J);
    coeff += q;
    out.set_coeff(J, coeff);
  }
  return out;
}

bool ideal_membership(const SliceSpec& spec, const Fps& f) {
  return slice_pullback(spec, f).is_zero();
}

LevelSetResult level_set(const Morphism& m, const Point& a, const Point& b,
                         unsigned order) {
  if (m.underlying_point(b) != a)
    fail(errc::fiber_mismatch, "the fiber point does not lie over the value");
  LevelSetResult out;
  out.standardization = standardize(m, b, order);
  std::size_t np = m.src().n, kp = m.src().k, n = m.tgt().n, k = m.tgt().k;
  std::size_t r1 = out.standardization.r1, r2 = out.standardization.r2,
              r3 = out.standardization.r3;
  out.fiber_n = np - r1;
  out.fiber_k = kp - r2 - r3;

  // In the standardized source chart the fiber is the slice fixing the first
  // r1 smooth and first r2+r3 formal coordinates; conjugate its inclusion
  // jet back through the source chart change.
  Point b_std = out.standardization.source_chart_change.tgt_basepoint();
  Point fiber_base(b_std.begin() + r1, b_std.end());
  Point fiber_full = fiber_base;
  fiber_full.resize(out.fiber_n + out.fiber_k, Rational(0));
  std::vector<Jet> zeta;
  for (std::size_t t = 0; t < r1; ++t)
    zeta.push_back(Jet::constant(fiber_full, order, b_std[t]));
  for (std::size_t t = 0; t < out.fiber_n; ++t)
    zeta.push_back(Jet::coordinate(fiber_full, order, t));
  for (std::size_t mdx = 0; mdx < r2 + r3; ++mdx)
    zeta.push_back(Jet(fiber_full, order));
  for (std::size_t mdx = 0; mdx < out.fiber_k; ++mdx)
    zeta.push_back(Jet::coordinate(fiber_full, order, out.fiber_n + mdx));
  JetMap zeta_map({out.fiber_n, out.fiber_k}, m.src(), fiber_base, b_std,
                  std::move(zeta), order);
  out.embedding =
      compose(jet_invert(out.standardization.source_chart_change, order), zeta_map);

  JetMap jm = morphism_to_jetmap(m, b, order);
  for (std::size_t i = 0; i < n; ++i)
    out.ideal_generators.push_back(jm.component(i) -
                                   Jet::constant(jm.full_src_basepoint(), order, a[i]));
  for (std::size_t j = 0; j < k; ++j)
    out.ideal_generators.push_back(jm.component(n + j));
  return out;
}

} // namespace formalcalc
