#include "formalcalc/localforms.hpp"

#include "formalcalc/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace formalcalc {

namespace {

std::vector<std::size_t> iota_vec(std::size_t from, std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& chosen,
                                       std::size_t limit) {
  std::vector<bool> in(limit, false);
  for (std::size_t c : chosen) in[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < limit; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

// The z-free part of a component jet: the jet of the reduction.
Jet reduction_part(const Jet& c, std::size_t n_smooth) {
  Jet out(c.basepoint(), c.order());
  for (const auto& [m, v] : c.coeffs()) {
    bool smooth_only = true;
    for (std::size_t i = n_smooth; i < m.size(); ++i)
      if (m[i]) smooth_only = false;
    if (smooth_only) out.set_coeff(m, v);
  }
  return out;
}

bool involves_only(const Jet& j, const std::vector<bool>& allowed) {
  for (const auto& [m, v] : j.coeffs())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] && !allowed[i]) return false;
  return true;
}

Point values_of(const std::vector<Jet>& comps, std::size_t count) {
  Point out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(comps[i].value());
  return out;
}

Point padded(Point base, std::size_t k) {
  base.resize(base.size() + k, Rational(0));
  return base;
}

// Coordinate permutation as a jet map: new coordinate i is the old
// coordinate perm[i]; smooth and formal blocks are permuted separately.
JetMap permutation_map(const Shape& s, const Point& smooth_base,
                       const std::vector<std::size_t>& perm, unsigned order) {
  Point full = padded(smooth_base, s.k);
  std::vector<Jet> comps;
  Point new_base;
  for (std::size_t i = 0; i < s.n + s.k; ++i) {
    comps.push_back(Jet::coordinate(full, order, perm[i]));
    if (i < s.n) new_base.push_back(smooth_base[perm[i]]);
  }
  return JetMap(s, s, smooth_base, new_base, std::move(comps), order);
}

std::vector<std::string> target_var_names(const Shape& s) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t j = 0; j < s.k; ++j) names.push_back("y" + std::to_string(j + 1));
  return names;
}

} // namespace

ConstantRankResult constant_rank_check(const Morphism& m, const Point& b) {
  ConstantRankResult out;
  JacobianBlocks jb = m.jacobian();
  std::size_t n = m.tgt().n, k = m.tgt().k, np = m.src().n, kp = m.src().k;
  out.triple = rank_triple_of(jb.eval(b), n, k, np, kp);
  PolyMat J(n + k, np + kp, np);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < np; ++j) J(i, j) = jb.F(i, j);
    for (std::size_t j = 0; j < kp; ++j) J(i, np + j) = jb.G(i, j);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < kp; ++j) J(n + i, np + j) = jb.H(i, j);
  out.constant = jb.F.all_minors_vanish(out.triple.reduced + 1) &&
                 jb.H.all_minors_vanish(out.triple.formal + 1) &&
                 J.all_minors_vanish(out.triple.total + 1);
  return out;
}

RankNormalForm rank_normal_form(const Morphism& m, const Point& b, unsigned order) {
  ConstantRankResult crc = constant_rank_check(m, b);
  if (!crc.constant)
    fail(errc::not_constant_rank,
         "rank triple " + crc.triple.to_string() + " is not constant near the point");
  std::size_t n = m.tgt().n, k = m.tgt().k, np = m.src().n, kp = m.src().k;
  std::size_t r1 = crc.triple.reduced, r3 = crc.triple.formal;
  std::size_t r2 = crc.triple.total - r1 - r3;

  JetMap jm = morphism_to_jetmap(m, b, order);
  Point a = jm.tgt_basepoint();
  Point a_full = padded(a, k);
  Point src_full = jm.full_src_basepoint();
  RatMat L = jm.linear_part();
  RatMat F_b = L.submatrix(iota_vec(0, n), iota_vec(0, np));

  // Step 1: straighten the reduction on the source. The new smooth
  // coordinates are the selected reduced components followed by the source
  // coordinates complementary to the selected columns.
  std::vector<std::size_t> R1 =
      greedy_independent_rows(F_b, iota_vec(0, n), RatMat(0, np), r1);
  std::vector<std::size_t> C1 = greedy_independent_rows(
      F_b.submatrix(R1, iota_vec(0, np)).transposed(), iota_vec(0, np), RatMat(0, r1), r1);
  std::vector<std::size_t> C1c = complement_of(C1, np);

  std::vector<Jet> a_comps;
  for (std::size_t t = 0; t < r1; ++t)
    a_comps.push_back(reduction_part(jm.component(R1[t]), np));
  for (std::size_t t = r1; t < np; ++t)
    a_comps.push_back(Jet::coordinate(src_full, order, C1c[t - r1]));
  for (std::size_t j = 0; j < kp; ++j)
    a_comps.push_back(Jet::coordinate(src_full, order, np + j));
  JetMap A(m.src(), m.src(), b, values_of(a_comps, np), a_comps, order);
  JetMap phi1 = compose(jm, jet_invert(A, order));

  // Step 2: clean the non-selected reductions on the target. After step 1
  // the selected reductions are exactly the first r1 coordinates, and every
  // other reduction factors through them (this is where constant rank of F
  // enters); subtracting that factorization kills the remaining reductions.
  std::vector<std::size_t> R1c = complement_of(R1, n);
  std::vector<bool> first_r1(np + kp, false);
  for (std::size_t t = 0; t < r1; ++t) first_r1[t] = true;
  Point src1_full = phi1.full_src_basepoint();

  std::vector<Jet> b_comps;
  for (std::size_t t = 0; t < r1; ++t)
    b_comps.push_back(Jet::coordinate(a_full, order, R1[t]));
  for (std::size_t l : R1c) {
    Jet ghat = reduction_part(phi1.component(l), np);
    if (!involves_only(ghat, first_r1))
      fail(errc::internal_limit,
           "reduction straightening left a dependence the constant-rank "
           "hypothesis excludes");
    std::vector<Jet> args;
    for (std::size_t t = 0; t < np + kp; ++t) {
      if (t < r1)
        args.push_back(Jet::coordinate(a_full, order, R1[t]));
      else
        args.push_back(Jet::constant(a_full, order, src1_full[t]));
    }
    b_comps.push_back(Jet::coordinate(a_full, order, l) - jet_subst(ghat, args));
  }
  for (std::size_t j = 0; j < k; ++j)
    b_comps.push_back(Jet::coordinate(a_full, order, n + j));
  // Components so far sit in the order (R1, R1c, y): the selected
  // coordinates keep their values while the cleaned ones vanish at a, so the
  // image basepoint is read off from the components themselves.
  JetMap B(m.tgt(), m.tgt(), a, values_of(b_comps, n), b_comps, order);
  JetMap phi2 = compose(B, phi1);

  // Step 3: select the formal rows realizing r2 and r3, and absorb them into
  // a source chart change psi so they become plain formal coordinates.
  RatMat L2 = phi2.linear_part();
  std::vector<std::size_t> zcols = iota_vec(np, kp);
  RatMat H2 = L2.submatrix(iota_vec(n, k), zcols);
  RatMat G2mid = L2.submatrix(iota_vec(r1, n - r1), zcols);
  std::vector<std::size_t> rows_y1 =
      greedy_independent_rows(H2, iota_vec(0, k), RatMat(0, kp), r3);
  RatMat seed = H2.submatrix(rows_y1, iota_vec(0, kp));
  std::vector<std::size_t> rows_x2 =
      greedy_independent_rows(G2mid, iota_vec(0, n - r1), seed, r2);

  RatMat stacked(r2 + r3, kp);
  for (std::size_t i = 0; i < r2; ++i)
    for (std::size_t j = 0; j < kp; ++j) stacked(i, j) = G2mid(rows_x2[i], j);
  for (std::size_t i = 0; i < r3; ++i)
    for (std::size_t j = 0; j < kp; ++j) stacked(r2 + i, j) = H2(rows_y1[i], j);
  std::vector<std::size_t> C = greedy_independent_rows(
      stacked.transposed(), iota_vec(0, kp), RatMat(0, r2 + r3), r2 + r3);
  std::vector<std::size_t> Cc = complement_of(C, kp);

  Point src2_full = phi2.full_src_basepoint();
  std::vector<Jet> psi_comps;
  for (std::size_t t = 0; t < r1; ++t) psi_comps.push_back(phi2.component(t));
  for (std::size_t t = r1; t < np; ++t)
    psi_comps.push_back(Jet::coordinate(src2_full, order, t));
  for (std::size_t i = 0; i < r2; ++i)
    psi_comps.push_back(phi2.component(r1 + rows_x2[i]));
  for (std::size_t i = 0; i < r3; ++i)
    psi_comps.push_back(phi2.component(n + rows_y1[i]));
  for (std::size_t c : Cc)
    psi_comps.push_back(Jet::coordinate(src2_full, order, np + c));
  JetMap psi(m.src(), m.src(), phi2.src_basepoint(), values_of(psi_comps, np),
             psi_comps, order);
  JetMap phi3 = compose(phi2, jet_invert(psi, order));

  // Step 4: final target permutation into the (u, g, z | z, h) layout.
  std::vector<std::size_t> perm(n + k);
  std::vector<std::size_t> x2_abs;
  for (std::size_t i = 0; i < r2; ++i) x2_abs.push_back(r1 + rows_x2[i]);
  std::vector<std::size_t> x_rest = complement_of(x2_abs, n);
  // x_rest starts with 0..r1-1 since x2_abs lives in the middle block.
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n - r2; ++i) perm[pos++] = x_rest[i];
  for (std::size_t i = 0; i < r2; ++i) perm[pos++] = x2_abs[i];
  for (std::size_t i = 0; i < r3; ++i) perm[pos++] = n + rows_y1[i];
  for (std::size_t j : complement_of(rows_y1, k)) perm[pos++] = n + j;
  JetMap P = permutation_map(m.tgt(), phi3.tgt_basepoint(), perm, order);

  RankNormalForm out;
  out.conjugated = compose(P, phi3);
  out.theta_tgt = compose(P, B);
  out.theta_src = compose(psi, A);
  out.triple = crc.triple;
  out.r1 = r1;
  out.r2 = r2;
  out.r3 = r3;
  return out;
}

namespace {

struct PullbackMatrix {
  std::vector<MultiIndex> dom, cod; // positive monomials, target resp. source
  RatMat M;                         // cod.size() x dom.size()
};

PullbackMatrix truncated_pullback_matrix(const Morphism& m, const Point& b,
                                         unsigned order, std::size_t cap) {
  JetMap jm = morphism_to_jetmap(m, b, order);
  std::size_t tn = m.tgt().n + m.tgt().k, sn = m.src().n + m.src().k;
  PullbackMatrix out;
  out.dom = positive_indices_up_to(tn, order);
  out.cod = positive_indices_up_to(sn, order);
  if (out.dom.size() > cap || out.cod.size() > cap)
    fail(errc::internal_limit, "truncated pullback matrix exceeds the size cap");
  std::map<MultiIndex, std::size_t, GrlexLess> row_of;
  for (std::size_t r = 0; r < out.cod.size(); ++r) row_of[out.cod[r]] = r;
  Point a_full = padded(jm.tgt_basepoint(), m.tgt().k);
  out.M = RatMat(out.cod.size(), out.dom.size());
  for (std::size_t c = 0; c < out.dom.size(); ++c) {
    Jet g(a_full, order);
    g.set_coeff(out.dom[c], 1);
    Jet p = jm.pull(g);
    for (const auto& [mi, v] : p.coeffs()) out.M(row_of.at(mi), c) = v;
  }
  return out;
}

} // namespace

KernelCertificate kernel_surjectivity_certificate(const Morphism& m, const Point& b,
                                                  unsigned order,
                                                  std::size_t matrix_side_cap) {
  if (order < 2)
    fail(errc::order_too_small, "kernel certificate needs order >= 2");
  PullbackMatrix pm = truncated_pullback_matrix(m, b, order, matrix_side_cap);
  RatMat K = nullspace(pm.M);

  JetMap jm = morphism_to_jetmap(m, b, order);
  RatMat Kb2 = nullspace(jm.linear_part().transposed());

  std::size_t tn = m.tgt().n + m.tgt().k;
  // Rows of K carrying the degree-1 coefficients, in coordinate order.
  std::vector<std::size_t> unit_rows;
  {
    std::map<MultiIndex, std::size_t, GrlexLess> pos;
    for (std::size_t r = 0; r < pm.dom.size(); ++r) pos[pm.dom[r]] = r;
    for (std::size_t i = 0; i < tn; ++i) unit_rows.push_back(pos.at(unit_index(tn, i)));
  }
  RatMat P1 = K.submatrix(unit_rows, iota_vec(0, K.cols()));

  KernelCertificate cert;
  cert.order = order;
  cert.dim_ker_deg2 = Kb2.cols();
  Point a_full = padded(jm.tgt_basepoint(), m.tgt().k);
  for (std::size_t s = 0; s < Kb2.cols(); ++s) {
    KernelLift lift;
    for (std::size_t i = 0; i < tn; ++i) lift.degree_one.push_back(Kb2(i, s));
    std::vector<Rational> x;
    if (solve(P1, lift.degree_one, x)) {
      Jet j(a_full, order);
      for (std::size_t r = 0; r < pm.dom.size(); ++r) {
        Rational v = 0;
        for (std::size_t c = 0; c < K.cols(); ++c) v += K(r, c) * x[c];
        if (v != 0) j.set_coeff(pm.dom[r], v);
      }
      lift.lift = std::move(j);
    } else {
      cert.verdict = CertVerdict::not_surjective;
    }
    cert.lifted.push_back(std::move(lift));
  }
  return cert;
}

bool truncated_pullback_surjective(const Morphism& m, const Point& b, unsigned s,
                                   std::size_t matrix_side_cap) {
  if (s == 0) return true;
  PullbackMatrix pm = truncated_pullback_matrix(m, b, s, matrix_side_cap);
  return rank(pm.M) == pm.cod.size();
}

StandardizationResult standardize(const Morphism& m, const Point& b, unsigned order,
                                  std::size_t matrix_side_cap) {
  ConstantRankResult crc = constant_rank_check(m, b);
  if (!crc.constant)
    fail(errc::not_constant_rank,
         "rank triple " + crc.triple.to_string() + " is not constant near the point");
  KernelCertificate cert = kernel_surjectivity_certificate(m, b, order, matrix_side_cap);
  if (cert.verdict == CertVerdict::not_surjective) {
    std::vector<std::string> names = target_var_names(m.tgt());
    std::string witness;
    for (const auto& lift : cert.lifted) {
      if (lift.lift) continue;
      for (std::size_t i = 0; i < lift.degree_one.size(); ++i) {
        if (lift.degree_one[i] == 0) continue;
        if (!witness.empty()) witness += " + ";
        if (lift.degree_one[i] != 1) witness += rational_to_string(lift.degree_one[i]) + "*";
        witness += names[i];
      }
      break;
    }
    fail(errc::not_standardizable,
         "kernel element " + witness + " of the degree-2 kernel has no truncated lift");
  }
  RankNormalForm rnf = rank_normal_form(m, b, order);
  std::size_t n = m.tgt().n, k = m.tgt().k, np = m.src().n, kp = m.src().k;
  std::size_t r1 = rnf.r1, r2 = rnf.r2, r3 = rnf.r3;

  // The residual g, h components must only involve the coordinates the
  // standardized projection retains; then their Borel preimages are plain
  // variable renamings into the target chart.
  std::vector<bool> allowed(np + kp, false);
  for (std::size_t t = 0; t < r1; ++t) allowed[t] = true;
  for (std::size_t mdx = 0; mdx < r2 + r3; ++mdx) allowed[np + mdx] = true;
  // Source variable -> target variable under the standard form.
  std::vector<std::size_t> rename(np + kp, 0);
  for (std::size_t t = 0; t < r1; ++t) rename[t] = t;
  for (std::size_t mdx = 0; mdx < r2; ++mdx) rename[np + mdx] = n - r2 + mdx;
  for (std::size_t j = 0; j < r3; ++j) rename[np + r2 + j] = n + j;

  Point a_std = rnf.conjugated.tgt_basepoint();
  Point a_std_full = padded(a_std, k);
  std::vector<Jet> theta2;
  for (std::size_t i = 0; i < n + k; ++i)
    theta2.push_back(Jet::coordinate(a_std_full, order, i));
  auto subtract_renamed = [&](std::size_t slot) {
    const Jet& g = rnf.conjugated.component(slot);
    if (!involves_only(g, allowed))
      fail(errc::not_standardizable,
           "normal-form component " + std::to_string(slot + 1) +
               " leaves the image subalgebra; no Borel preimage exists at this order");
    Jet gp(a_std_full, order);
    for (const auto& [mi, v] : g.coeffs()) {
      MultiIndex out_mi(n + k, 0);
      for (std::size_t t = 0; t < np + kp; ++t)
        if (mi[t]) out_mi[rename[t]] = mi[t];
      gp.set_coeff(out_mi, v);
    }
    theta2[slot] -= gp;
  };
  for (std::size_t i = r1; i < n - r2; ++i) subtract_renamed(i);
  for (std::size_t j = r3; j < k; ++j) subtract_renamed(n + j);

  JetMap theta2_map(m.tgt(), m.tgt(), a_std, values_of(theta2, n), theta2, order);

  StandardizationResult out;
  out.triple = rnf.triple;
  out.r1 = r1;
  out.r2 = r2;
  out.r3 = r3;
  out.source_chart_change = rnf.theta_src;
  out.target_chart_change = compose(theta2_map, rnf.theta_tgt);
  out.standardized = compose(theta2_map, rnf.conjugated);
  out.residual = order;
  return out;
}

JetMap local_section(const Morphism& m, const Point& b, unsigned order) {
  ClassifyFlags flags = m.classify_at(b);
  if (!(flags.regular && flags.submersion))
    fail(errc::not_regular_submersion,
         "local sections require a regular submersion at the point");
  RankNormalForm rnf = rank_normal_form(m, b, order);
  std::size_t n = m.tgt().n, k = m.tgt().k, np = m.src().n, kp = m.src().k;

  // In the straightened charts the morphism is the plain projection
  // (u, z) -> (u_1..u_n, z_1..z_k); zero-padding the remaining source
  // coordinates is a section of it.
  Point a_std = rnf.conjugated.tgt_basepoint();
  Point a_std_full = padded(a_std, k);
  Point b_std = rnf.conjugated.src_basepoint();
  std::vector<Jet> sigma;
  for (std::size_t t = 0; t < np; ++t) {
    if (t < n)
      sigma.push_back(Jet::coordinate(a_std_full, order, t));
    else
      sigma.push_back(Jet::constant(a_std_full, order, b_std[t]));
  }
  for (std::size_t mdx = 0; mdx < kp; ++mdx) {
    if (mdx < k)
      sigma.push_back(Jet::coordinate(a_std_full, order, n + mdx));
    else
      sigma.push_back(Jet(a_std_full, order)); // zero jet
  }
  JetMap sigma_map(m.tgt(), m.src(), a_std, b_std, std::move(sigma), order);
  return compose(jet_invert(rnf.theta_src, order), compose(sigma_map, rnf.theta_tgt));
}

Fps graded_component_map(const Morphism& m, unsigned r, const Fps& f) {
  if (f.n_smooth() != m.tgt().n || f.k_formal() != m.tgt().k)
    fail(errc::shape_mismatch, "series shape does not match morphism target");
  for (const auto& [J, p] : f.coeffs())
    if (total_degree(J) != r)
      fail(errc::grade_mismatch, "input is not homogeneous of formal degree " +
                                     std::to_string(r));
  std::size_t np = m.src().n, kp = m.src().k, k = m.tgt().k;
  unsigned order = std::min(f.order(), m.order());
  JacobianBlocks jb = m.jacobian();

  std::vector<Poly> red;
  MultiIndex zero_k(m.src().k, 0);
  for (const auto& c : m.cx()) red.push_back(c.coeff(zero_k));

  std::vector<Fps> Hz;
  for (std::size_t j = 0; j < k; ++j) {
    Fps h(np, kp, order);
    for (std::size_t jp = 0; jp < kp; ++jp)
      h += jb.H(j, jp) * Fps::formal_variable(np, kp, order, jp);
    Hz.push_back(std::move(h));
  }

  Fps out(np, kp, order);
  for (const auto& [J, p] : f.coeffs()) {
    // p.subst({}) would land in the zero-arity ring; constants need the
    // source arity spelled out.
    Poly pulled = red.empty() ? Poly::constant(np, p.coeff(MultiIndex(0, 0)))
                              : p.subst(red);
    Fps term = Fps::from_poly(pulled, kp, order);
    for (std::size_t j = 0; j < k; ++j)
      if (J[j]) term = term * Hz[j].pow(J[j]);
    out += term;
  }
  return out;
}

} // namespace formalcalc
