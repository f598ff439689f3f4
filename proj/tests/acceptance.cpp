// Acceptance gate: one property per criterion, one PASS/FAIL line each.
// All checks use exact rational arithmetic and fixed RNG seeds.

#include "testutil.hpp"

#include "formalcalc/localforms.hpp"
#include "formalcalc/parse.hpp"
#include "formalcalc/submanifold.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace formalcalc;

namespace {

int failures = 0;

void run_criterion(int num, const std::string& desc,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << desc;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

Shape rnd_shape(std::mt19937& rng, std::size_t lo = 0, std::size_t hi = 3) {
  std::uniform_int_distribution<std::size_t> d(lo, hi);
  return Shape{d(rng), d(rng)};
}

// --- 1: chain rule ---------------------------------------------------------

bool chain_rule(std::string& detail) {
  std::mt19937 rng(1001u);
  const unsigned D = 4;
  int checked = 0;
  for (int it = 0; it < 110; ++it) {
    Shape s1 = rnd_shape(rng), s2 = rnd_shape(rng), s3 = rnd_shape(rng);
    Morphism inner = testutil::rnd_morphism(rng, s1, s2, D);
    Morphism outer = testutil::rnd_morphism(rng, s2, s3, D);
    Point b = testutil::rnd_point(rng, s1.n);
    Point mid = inner.underlying_point(b);
    RatMat lhs = compose(outer, inner).jacobian().eval(b);
    RatMat rhs = outer.jacobian().eval(mid) * inner.jacobian().eval(b);
    if (!(lhs == rhs)) {
      detail = "mismatch at iteration " + std::to_string(it);
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " composable pairs";
  return checked >= 100;
}

// --- 2: inverse function theorem -------------------------------------------

bool inverse_function(std::string& detail) {
  std::mt19937 rng(1002u);
  const unsigned D = 6;
  std::vector<Shape> shapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 1}};
  int checked = 0;
  for (int it = 0; it < 54; ++it) {
    Shape s = shapes[it % shapes.size()];
    Morphism a = testutil::rnd_auto(rng, s, D);
    Point b = testutil::rnd_point(rng, s.n);
    JetMap jm = morphism_to_jetmap(a, b, D);
    JetMap inv = jet_invert(jm, D);
    bool ok = compose(jm, inv) == JetMap::identity(s, jm.tgt_basepoint(), D) &&
              compose(inv, jm) == JetMap::identity(s, b, D);
    if (!ok) {
      detail = "roundtrip failed at iteration " + std::to_string(it);
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " jet maps, both roundtrips mod degree 7";
  return checked >= 50;
}

// --- 3: rank law for bijective differentials -------------------------------

bool bijective_rank_law(std::string& detail) {
  std::mt19937 rng(1003u);
  const unsigned D = 4;
  struct Dims {
    std::size_t np, n, k; // k' = n - n' + k keeps the differential square
  };
  std::vector<Dims> dims{{1, 1, 1}, {1, 2, 1}, {2, 2, 1}, {1, 2, 2}, {2, 3, 1}};
  int checked = 0;
  for (int it = 0; it < 20; ++it) {
    Dims d = dims[it % dims.size()];
    std::size_t kp = d.n - d.np + d.k;
    Morphism m = testutil::rnd_standardizable(rng, d.np, d.n - d.np, d.k,
                                              {d.np, kp}, {d.n, d.k}, D);
    Point b(d.np, Rational(0));
    if (!m.classify_at(b).bijective_differential) {
      detail = "generator produced a non-bijective differential";
      return false;
    }
    StandardizationResult st = standardize(m, b, D);
    bool ok = st.r1 == d.np && st.r2 == d.n - d.np && st.r3 == d.k;
    if (!ok) {
      detail = "triple (" + std::to_string(st.r1) + "," + std::to_string(st.r2) +
               "," + std::to_string(st.r3) + ") at iteration " + std::to_string(it);
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " morphisms, (r1,r2,r3) = (n', n-n', k)";
  return checked >= 20;
}

// --- 4: counterexamples ----------------------------------------------------

bool counterexamples(std::string& detail) {
  const unsigned D = 4;
  auto su = [](std::size_t n, std::size_t k, std::size_t i) {
    return Fps::smooth_variable(n, k, D, i);
  };
  auto fz = [](std::size_t n, std::size_t k, std::size_t j) {
    return Fps::formal_variable(n, k, D, j);
  };

  // (a) (u1 | z1) into the plane: bijective differential, the reduced
  // differential is not bijective.
  {
    Morphism m({1, 1}, {2, 0}, {su(1, 1, 0), fz(1, 1, 0)}, {});
    Point b{Rational(0)};
    if (!(m.rank_at(b) == RankTriple{2, 1, 0})) {
      detail = "(a) wrong rank triple";
      return false;
    }
    ClassifyFlags fl = m.classify_at(b);
    if (!fl.bijective_differential || m.rank_at(b).reduced == m.tgt().n) {
      detail = "(a) classification disagrees";
      return false;
    }
  }

  // (b) (u1, z1 | u1*z1, z2): immersion at 0, rank triple not constant.
  {
    Morphism m({1, 2}, {2, 2}, {su(1, 2, 0), fz(1, 2, 0)},
               {su(1, 2, 0) * fz(1, 2, 0), fz(1, 2, 1)});
    Point b{Rational(0)};
    if (!m.classify_at(b).immersion || constant_rank_check(m, b).constant) {
      detail = "(b) immersion/constant-rank verdicts disagree";
      return false;
    }
  }

  // (c) (u1, u1*u2 + z1 | z2): submersion along u1 = 0, rank not constant.
  {
    Morphism m({2, 2}, {2, 1},
               {su(2, 2, 0), su(2, 2, 0) * su(2, 2, 1) + fz(2, 2, 0)},
               {fz(2, 2, 1)});
    for (int c = 0; c <= 1; ++c) {
      Point b{Rational(0), Rational(c)};
      if (!m.classify_at(b).submersion || constant_rank_check(m, b).constant) {
        detail = "(c) verdict wrong at c = " + std::to_string(c);
        return false;
      }
    }
  }

  // (d) phi^*(y1) = z1^2: constant rank (0,0,0), refused with witness y1.
  {
    Morphism m({0, 1}, {0, 1}, {}, {fz(0, 1, 0).pow(2)});
    ConstantRankResult crc = constant_rank_check(m, {});
    if (!crc.constant || !(crc.triple == RankTriple{0, 0, 0})) {
      detail = "(d) constant-rank verdict wrong";
      return false;
    }
    try {
      standardize(m, {}, D);
      detail = "(d) standardize unexpectedly succeeded";
      return false;
    } catch (const calc_error& e) {
      if (e.code() != errc::not_standardizable ||
          std::string(e.what()).find("y1") == std::string::npos) {
        detail = "(d) wrong refusal";
        return false;
      }
    }
  }

  detail = "examples (a)-(d) reproduced";
  return true;
}

// --- 5: regularity implies constant rank -----------------------------------

bool regular_implies_constant(std::string& detail) {
  std::mt19937 rng(1005u);
  const unsigned D = 3;
  int checked = 0, qualifying = 0;
  for (int it = 0; it < 210; ++it) {
    Morphism m;
    if (it % 3 == 0) {
      Shape s = rnd_shape(rng, 1, 2);
      m = testutil::rnd_auto(rng, s, D);
    } else {
      m = testutil::rnd_morphism(rng, rnd_shape(rng), rnd_shape(rng), D);
    }
    Point b = testutil::rnd_point(rng, m.src().n);
    ClassifyFlags fl = m.classify_at(b);
    bool hypothesis = (fl.regular && fl.immersion) ||
                      (fl.regular && fl.submersion) || fl.bijective_differential;
    ++checked;
    if (!hypothesis) continue;
    ++qualifying;
    if (!constant_rank_check(m, b).constant) {
      detail = "counterexample at iteration " + std::to_string(it);
      return false;
    }
  }
  detail = std::to_string(checked) + " points, " + std::to_string(qualifying) +
           " qualifying, no counterexample";
  return checked >= 200 && qualifying > 0;
}

// --- 6: Borel roundtrip and slice pullback ---------------------------------

SliceSpec rnd_spec(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> d(0, 2);
  for (;;) {
    SliceSpec s;
    s.n = d(rng) + 1;
    s.n_prime = d(rng) % (s.n + 1);
    s.r = d(rng);
    s.k = d(rng) + 1;
    s.k_prime = d(rng) + d(rng);
    if (s.n_prime > s.n || s.r > s.n - s.n_prime) continue;
    if (s.r > s.k_prime || s.k_prime - s.r > s.k) continue;
    return s;
  }
}

bool borel_roundtrip(std::string& detail) {
  std::mt19937 rng(1006u);
  const unsigned D = 6;
  int roundtrips = 0, agreements = 0;
  for (int it = 0; it < 100; ++it) {
    SliceSpec spec = rnd_spec(rng);
    Fps g = testutil::rnd_fps(rng, spec.n_prime, spec.k_prime, D, 3);
    if (!(slice_pullback(spec, borel_preimage(spec, g, D)) == g)) {
      detail = "roundtrip failed at iteration " + std::to_string(it);
      return false;
    }
    ++roundtrips;
  }
  for (int it = 0; it < 100; ++it) {
    SliceSpec spec = rnd_spec(rng);
    Fps f = testutil::rnd_fps(rng, spec.n, spec.k, D, 2);
    if (!(slice_pullback(spec, f) == make_slice(spec, D).pullback(f))) {
      detail = "substitution disagreement at iteration " + std::to_string(it);
      return false;
    }
    ++agreements;
  }
  detail = std::to_string(roundtrips) + " roundtrips, " +
           std::to_string(agreements) + " substitution agreements";
  return roundtrips >= 100 && agreements >= 100;
}

// --- 7: graded-map consistency ---------------------------------------------

bool graded_consistency(std::string& detail) {
  std::mt19937 rng(1007u);
  const unsigned D = 4;
  int checked = 0;
  for (int it = 0; it < 54; ++it) {
    Shape src = rnd_shape(rng, 1, 2);
    Shape tgt{std::uniform_int_distribution<std::size_t>(0, 2)(rng),
              std::uniform_int_distribution<std::size_t>(1, 2)(rng)};
    Morphism m = testutil::rnd_morphism(rng, src, tgt, D);
    unsigned r = 1 + static_cast<unsigned>(it % 3);
    Fps hom(tgt.n, tgt.k, D);
    for (const auto& J : indices_of_degree(tgt.k, r))
      hom.set_coeff(J, testutil::rnd_poly(rng, tgt.n, 2, 2));
    Fps full = m.pullback(hom);
    Fps graded_part(src.n, src.k, D);
    for (const auto& [J, p] : full.coeffs())
      if (total_degree(J) == r) graded_part.set_coeff(J, p);
    if (!(graded_component_map(m, r, hom) == graded_part)) {
      detail = "mismatch at iteration " + std::to_string(it);
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " morphisms, r in {1,2,3}";
  return checked >= 50;
}

// --- 8: immersion iff truncated stalk surjectivity --------------------------

bool immersion_surjectivity(std::string& detail) {
  std::mt19937 rng(1008u);
  const unsigned D = 3;
  int checked = 0, immersions = 0;
  for (int it = 0; it < 110; ++it) {
    Shape src = rnd_shape(rng, 0, 2);
    Shape tgt = rnd_shape(rng, 0, 2);
    if (src.n + src.k == 0 && tgt.n + tgt.k == 0) continue;
    Morphism m = testutil::rnd_morphism(rng, src, tgt, D);
    Point b = testutil::rnd_point(rng, src.n);
    bool imm = m.classify_at(b).immersion;
    bool sur2 = truncated_pullback_surjective(m, b, 2);
    if (imm != sur2) {
      detail = "degree-2 equivalence failed at iteration " + std::to_string(it);
      return false;
    }
    if (imm) {
      ++immersions;
      if (!truncated_pullback_surjective(m, b, 3) ||
          !truncated_pullback_surjective(m, b, 4)) {
        detail = "higher-order surjectivity failed at iteration " + std::to_string(it);
        return false;
      }
    }
    ++checked;
  }
  detail = std::to_string(checked) + " pairs, " + std::to_string(immersions) +
           " immersion points checked at orders 3 and 4";
  return checked >= 100 && immersions > 0;
}

// --- 9: level-set dimension law --------------------------------------------

bool level_set_dimensions(std::string& detail) {
  std::mt19937 rng(1009u);
  const unsigned D = 4;
  struct Case {
    std::size_t r1, r2, r3;
    Shape src, tgt;
  };
  std::vector<Case> cases{
      {1, 0, 1, {1, 1}, {2, 1}}, {1, 1, 1, {2, 2}, {2, 2}},
      {2, 0, 1, {2, 2}, {2, 1}}, {0, 1, 0, {1, 2}, {2, 1}},
      {1, 0, 1, {2, 2}, {1, 1}},
  };
  int checked = 0;
  for (int it = 0; it < 20; ++it) {
    const Case& c = cases[it % cases.size()];
    Morphism m = testutil::rnd_standardizable(rng, c.r1, c.r2, c.r3, c.src, c.tgt, D);
    Point b(c.src.n, Rational(0));
    Point a = m.underlying_point(b);
    LevelSetResult ls = level_set(m, a, b, D);
    if (ls.fiber_n != c.src.n - c.r1 || ls.fiber_k != c.src.k - c.r2 - c.r3) {
      detail = "dimension law failed at iteration " + std::to_string(it);
      return false;
    }
    JetMap jm = morphism_to_jetmap(m, b, D);
    JetMap down = compose(jm, ls.embedding);
    Point fiber_full = ls.embedding.full_src_basepoint();
    for (std::size_t i = 0; i < m.tgt().n; ++i)
      if (!(down.component(i) == Jet::constant(fiber_full, D, a[i]))) {
        detail = "embedding does not land in the fiber (smooth component)";
        return false;
      }
    for (std::size_t j = 0; j < m.tgt().k; ++j)
      if (!down.component(m.tgt().n + j).is_zero()) {
        detail = "embedding does not land in the fiber (formal component)";
        return false;
      }
    ++checked;
  }
  detail = std::to_string(checked) +
           " morphisms, dims (n'-r1, k'-r2-r3), phi o embedding constant";
  return checked >= 20;
}

} // namespace

int main() {
  run_criterion(1, "chain rule: J(outer o inner) = J(outer) J(inner)", chain_rule);
  run_criterion(2, "inverse function theorem: jet_invert roundtrips", inverse_function);
  run_criterion(3, "bijective differential standardizes with r2 = n - n' = k' - k",
                bijective_rank_law);
  run_criterion(4, "counterexamples: jumps, non-constant ranks, y |-> y^2",
                counterexamples);
  run_criterion(5, "regularity implies constant rank", regular_implies_constant);
  run_criterion(6, "Borel preimage sections the slice pullback", borel_roundtrip);
  run_criterion(7, "graded map equals the degree-r pullback component",
                graded_consistency);
  run_criterion(8, "immersion iff degree-2 truncated surjectivity",
                immersion_surjectivity);
  run_criterion(9, "level-set dimension law and fiber embedding",
                level_set_dimensions);
  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all 9 criteria passed" << std::endl;
  return 0;
}
