#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

#include "formalcalc/poly.hpp"

using namespace formalcalc;
using testutil::throws_code;

namespace {
Poly x(std::size_t arity, std::size_t i) { return Poly::variable(arity, i); }
Rational q(long n, long d = 1) { return Rational(n, d); }
} // namespace

TEST_CASE("construction and canonical form") {
  Poly z = Poly::zero(2);
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(Poly::constant(2, 0).is_zero());
  CHECK(Poly::constant(2, 1).is_constant());
  CHECK(Poly::monomial({1, 2}, 0).is_zero());

  // adding and subtracting the same term leaves no stored zero coefficient
  Poly p = x(2, 0) * x(2, 1);
  Poly s = p - p;
  CHECK(s.is_zero());
  CHECK(s.terms().empty());
}

TEST_CASE("square of x1 + 1/2") {
  Poly p = x(1, 0) + Poly::constant(1, q(1, 2));
  Poly sq = p * p;
  CHECK(sq.coeff({2}) == 1);
  CHECK(sq.coeff({1}) == 1);
  CHECK(sq.coeff({0}) == q(1, 4));
  CHECK(sq.degree() == 2);
  CHECK(sq == p.pow(2));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11u);
  for (int it = 0; it < 50; ++it) {
    Poly a = testutil::rnd_poly(rng, 3, 3, 4);
    Poly b = testutil::rnd_poly(rng, 3, 3, 4);
    Poly c = testutil::rnd_poly(rng, 3, 3, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Poly::zero(3) == a);
    CHECK(a * Poly::constant(3, 1) == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("derivatives: Leibniz rule and mixed partials") {
  std::mt19937 rng(12u);
  for (int it = 0; it < 30; ++it) {
    Poly a = testutil::rnd_poly(rng, 3, 3, 4);
    Poly b = testutil::rnd_poly(rng, 3, 3, 4);
    for (std::size_t v = 0; v < 3; ++v)
      CHECK((a * b).diff(v) == a.diff(v) * b + a * b.diff(v));
    CHECK(a.diff(0).diff(1) == a.diff(1).diff(0));
  }
  CHECK(x(2, 0).pow(3).diff(0) == Rational(3) * x(2, 0).pow(2));
  CHECK(Poly::constant(2, 5).diff(1).is_zero());
  CHECK(throws_code(errc::index_out_of_range, [] { x(2, 0).diff(2); }));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(13u);
  for (int it = 0; it < 30; ++it) {
    Poly a = testutil::rnd_poly(rng, 2, 3, 4);
    Poly b = testutil::rnd_poly(rng, 2, 3, 4);
    Point pt = testutil::rnd_point(rng, 2);
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}

TEST_CASE("shift produces Taylor coefficients") {
  // x^2 at a = 1: coefficients 1, 2, 1 in (x - 1)
  Poly p = x(1, 0).pow(2);
  Poly sh = p.shift({q(1)});
  CHECK(sh.coeff({0}) == 1);
  CHECK(sh.coeff({1}) == 2);
  CHECK(sh.coeff({2}) == 1);

  std::mt19937 rng(14u);
  for (int it = 0; it < 20; ++it) {
    Poly a = testutil::rnd_poly(rng, 2, 3, 4);
    Point pt = testutil::rnd_point(rng, 2);
    // constant coefficient of the shift is the value at the basepoint
    CHECK(a.shift(pt).coeff({0, 0}) == a.eval(pt));
    // shifting by a then by -a is the identity
    Point neg{-pt[0], -pt[1]};
    CHECK(a.shift(pt).shift(neg) == a);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(15u);
  for (int it = 0; it < 20; ++it) {
    Poly a = testutil::rnd_poly(rng, 2, 2, 3);
    Poly b = testutil::rnd_poly(rng, 2, 2, 3);
    std::vector<Poly> args{testutil::rnd_poly(rng, 3, 2, 3),
                           testutil::rnd_poly(rng, 3, 2, 3)};
    CHECK((a + b).subst(args) == a.subst(args) + b.subst(args));
    CHECK((a * b).subst(args) == a.subst(args) * b.subst(args));
  }
  // identity substitution
  Poly p = x(2, 0) * x(2, 1) + x(2, 1).pow(2);
  CHECK(p.subst({x(2, 0), x(2, 1)}) == p);
  CHECK(throws_code(errc::arity_mismatch, [&] { p.subst({x(2, 0)}); }));
}

TEST_CASE("a nonzero polynomial cannot vanish on a large grid") {
  // degree <= 3 in each variable: vanishing on the 5x5 grid forces zero
  std::mt19937 rng(16u);
  for (int it = 0; it < 10; ++it) {
    Poly a = testutil::rnd_poly(rng, 2, 3, 4);
    bool vanishes = true;
    for (int i = -2; i <= 2 && vanishes; ++i)
      for (int j = -2; j <= 2 && vanishes; ++j)
        if (a.eval({q(i), q(j)}) != 0) vanishes = false;
    CHECK(vanishes == a.is_zero());
  }
}

TEST_CASE("to_string uses grlex order and canonical signs") {
  Poly p = x(2, 1).pow(2) - x(2, 0) + Poly::constant(2, q(1, 2));
  CHECK(p.to_string() == "1/2 - x1 + x2^2");
  CHECK(Poly::zero(2).to_string() == "0");
  CHECK((-x(1, 0)).to_string() == "-x1");
}
