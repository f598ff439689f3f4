#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

#include "formalcalc/jet.hpp"

using namespace formalcalc;
using testutil::throws_code;

namespace {

Jet rnd_jet(std::mt19937& rng, const Point& base, unsigned order, int terms = 4) {
  Jet j(base, order);
  std::uniform_int_distribution<unsigned> ed(0, order);
  for (int t = 0; t < terms; ++t) {
    MultiIndex m(base.size(), 0);
    unsigned budget = order;
    for (auto& e : m) {
      e = std::min(ed(rng), budget);
      budget -= e;
    }
    j.set_coeff(m, j.coeff(m) + testutil::rnd_coeff(rng));
  }
  return j;
}

} // namespace

TEST_CASE("basic structure: value, min_degree, truncation") {
  Point base{Rational(2)};
  Jet c = Jet::constant(base, 4, Rational(3));
  CHECK(c.value() == 3);
  CHECK(c.min_degree() == 0);

  Jet t = Jet::coordinate(base, 4, 0);
  CHECK(t.value() == 2); // the coordinate function evaluates to the basepoint
  Jet shifted = t - c;   // 2 + (x-2) - 3
  CHECK(shifted.value() == -1);

  Jet z(base, 4);
  CHECK(z.is_zero());
  CHECK(z.min_degree() == Jet::kInfiniteDegree);

  Jet p = t - Jet::constant(base, 4, Rational(2)); // the shifted variable itself
  CHECK(p.min_degree() == 1);
  CHECK(p.pow(3).min_degree() == 3);
  CHECK(p.pow(3).truncated(2).is_zero());
  CHECK(p.pow(2).homogeneous_part(2) == p.pow(2));
  CHECK(p.pow(2).homogeneous_part(1).is_zero());
}

TEST_CASE("(1+t)(1-t) = 1 - t^2") {
  Point base{Rational(0)};
  Jet one = Jet::constant(base, 4, Rational(1));
  Jet t = Jet::coordinate(base, 4, 0);
  Jet prod = jet_mul(one + t, one - t);
  CHECK(prod == one - t.pow(2));
}

TEST_CASE("multiplication truncates at the minimum order") {
  Point base{Rational(0)};
  Jet t = Jet::coordinate(base, 3, 0);
  Jet t5 = Jet::coordinate(base, 5, 0);
  Jet prod = jet_mul(t.pow(2), t5.pow(2)); // degree 4 > min order 3
  CHECK(prod.order() == 3);
  CHECK(prod.is_zero());
}

TEST_CASE("substitution: t^2 composed with t + t^2") {
  Point base{Rational(0)};
  Jet t = Jet::coordinate(base, 4, 0);
  Jet f = t.pow(2);
  Jet g = t + t.pow(2);
  Jet comp = jet_subst(f, {g});
  // (t + t^2)^2 = t^2 + 2 t^3 + t^4
  CHECK(comp == t.pow(2) + Rational(2) * t.pow(3) + t.pow(4));
}

TEST_CASE("substitution with the coordinate jets is the identity") {
  std::mt19937 rng(21u);
  Point base{Rational(1), Rational(-1, 2)};
  std::vector<Jet> ids{Jet::coordinate(base, 5, 0), Jet::coordinate(base, 5, 1)};
  for (int it = 0; it < 20; ++it) {
    Jet f = rnd_jet(rng, base, 5);
    CHECK(jet_subst(f, ids) == f);
  }
}

TEST_CASE("substitution is a local homomorphism") {
  std::mt19937 rng(22u);
  Point outer{Rational(1)};
  Point inner{Rational(0), Rational(0)};
  for (int it = 0; it < 20; ++it) {
    Jet f = rnd_jet(rng, outer, 4);
    Jet g = rnd_jet(rng, outer, 4);
    // argument jet at `inner` whose value matches the outer basepoint
    Jet arg = rnd_jet(rng, inner, 4);
    arg.set_coeff(MultiIndex(2, 0), Rational(1));
    CHECK(jet_subst(f + g, {arg}) == jet_subst(f, {arg}) + jet_subst(g, {arg}));
    CHECK(jet_subst(jet_mul(f, g), {arg}) ==
          jet_mul(jet_subst(f, {arg}), jet_subst(g, {arg})));
  }
}

TEST_CASE("non-local substitution is rejected") {
  Point base{Rational(0)};
  Jet f = Jet::coordinate(base, 4, 0);
  Jet bad = Jet::constant({Rational(0)}, 4, Rational(1)); // value 1 != basepoint 0
  CHECK(throws_code(errc::not_local, [&] { jet_subst(f, {bad}); }));
  CHECK(throws_code(errc::arity_mismatch, [&] { jet_subst(f, {}); }));
}

TEST_CASE("basepoints must match in arithmetic") {
  Jet a = Jet::coordinate({Rational(0)}, 4, 0);
  Jet b = Jet::coordinate({Rational(1)}, 4, 0);
  CHECK(throws_code(errc::basepoint_mismatch, [&] { jet_mul(a, b); }));
}
