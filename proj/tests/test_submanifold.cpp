#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

#include "formalcalc/submanifold.hpp"

using namespace formalcalc;
using testutil::throws_code;

namespace {

const unsigned D = 6;

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

} // namespace

TEST_CASE("slice spec validation") {
  SliceSpec ok{/*n=*/3, /*n_prime=*/1, /*r=*/1, /*k=*/2, /*k_prime=*/2};
  ok.validate();
  CHECK(ok.r1() == 1);
  CHECK(ok.r2() == 1);
  CHECK(ok.r3() == 1);
  CHECK(throws_code(errc::constraint_violation, [] {
    SliceSpec{/*n=*/2, /*n_prime=*/2, /*r=*/1, /*k=*/1, /*k_prime=*/1}.validate();
  }));
  CHECK(throws_code(errc::constraint_violation, [] {
    SliceSpec{/*n=*/3, /*n_prime=*/1, /*r=*/2, /*k=*/1, /*k_prime=*/1}.validate();
  }));
  CHECK(throws_code(errc::constraint_violation, [] {
    SliceSpec{/*n=*/3, /*n_prime=*/1, /*r=*/0, /*k=*/1, /*k_prime=*/2}.validate();
  }));
}

TEST_CASE("the model slice morphism") {
  SliceSpec spec{/*n=*/3, /*n_prime=*/1, /*r=*/1, /*k=*/2, /*k_prime=*/2};
  Morphism zeta = make_slice(spec, D);
  CHECK(zeta.src() == Shape{1, 2});
  CHECK(zeta.tgt() == Shape{3, 2});
  CHECK(zeta.cx()[0] == Fps::smooth_variable(1, 2, D, 0));
  CHECK(zeta.cx()[1].is_zero());
  CHECK(zeta.cx()[2] == Fps::formal_variable(1, 2, D, 0));
  CHECK(zeta.cy()[0] == Fps::formal_variable(1, 2, D, 1));
  CHECK(zeta.cy()[1].is_zero());
  // everywhere an immersion; with r > 0 the rank triple mixes the smooth
  // and formal directions, so the slice is not regular
  Point b{Rational(1, 2)};
  ClassifyFlags fl = zeta.classify_at(b);
  CHECK(fl.immersion);
  CHECK(!fl.regular);
  CHECK(zeta.rank_at(b) == RankTriple{3, 1, 1});
  // an r = 0 slice is a regular immersion
  SliceSpec flat{/*n=*/2, /*n_prime=*/1, /*r=*/0, /*k=*/1, /*k_prime=*/1};
  ClassifyFlags fl0 = make_slice(flat, D).classify_at({Rational(0)});
  CHECK(fl0.immersion);
  CHECK(fl0.regular);
}

TEST_CASE("slice pullback: worked example") {
  // slice x2 |-> z1 of the plane: x1*x2 + x2^3 |-> u1*z1 + z1^3
  SliceSpec spec{/*n=*/2, /*n_prime=*/1, /*r=*/1, /*k=*/1, /*k_prime=*/1};
  Fps x1 = Fps::smooth_variable(2, 1, D, 0), x2 = Fps::smooth_variable(2, 1, D, 1);
  Fps f = x1 * x2 + x2.pow(3);
  Fps pb = slice_pullback(spec, f);
  Fps u1 = Fps::smooth_variable(1, 1, D, 0), z1 = Fps::formal_variable(1, 1, D, 0);
  CHECK(pb == u1 * z1 + z1.pow(3));
}

TEST_CASE("slice pullback agrees with substitution through make_slice") {
  std::mt19937 rng(81u);
  for (int it = 0; it < 25; ++it) {
    SliceSpec spec = rnd_spec(rng);
    Fps f = testutil::rnd_fps(rng, spec.n, spec.k, D, 2);
    CHECK(slice_pullback(spec, f) == make_slice(spec, D).pullback(f));
  }
}

TEST_CASE("Borel preimage is an exact section") {
  std::mt19937 rng(82u);
  for (int it = 0; it < 25; ++it) {
    SliceSpec spec = rnd_spec(rng);
    Fps g = testutil::rnd_fps(rng, spec.n_prime, spec.k_prime, D, 3);
    Fps back = slice_pullback(spec, borel_preimage(spec, g, D));
    CHECK(back == g);
  }
}

TEST_CASE("ideal membership") {
  SliceSpec spec{/*n=*/2, /*n_prime=*/1, /*r=*/0, /*k=*/1, /*k_prime=*/1};
  // the slice kills x2 and nothing else
  Fps x2 = Fps::smooth_variable(2, 1, D, 1);
  Fps y1 = Fps::formal_variable(2, 1, D, 0);
  CHECK(ideal_membership(spec, x2 * y1));
  CHECK(ideal_membership(spec, x2.pow(2)));
  CHECK(!ideal_membership(spec, y1));
  CHECK(!ideal_membership(spec, x2 + y1));
  CHECK(ideal_membership(spec, Fps::zero(2, 1, D)));
}

TEST_CASE("level set of a projection") {
  // (u1, u2 | z1, z2) -> (u1 | z1) over a = 1 at b = (1, 3)
  Morphism proj({2, 2}, {1, 1}, {Fps::smooth_variable(2, 2, D, 0)},
                {Fps::formal_variable(2, 2, D, 0)});
  Point b{Rational(1), Rational(3)};
  Point a{Rational(1)};
  LevelSetResult ls = level_set(proj, a, b, D);
  CHECK(ls.fiber_n == 1);
  CHECK(ls.fiber_k == 1);
  CHECK(ls.standardization.triple == RankTriple{2, 1, 1});
  // embedding: fiber point sits at b, the fiber coordinates fill u2, z2
  CHECK(ls.embedding.src() == Shape{1, 1});
  CHECK(ls.embedding.tgt() == Shape{2, 2});
  CHECK(ls.embedding.tgt_basepoint() == b);
  // composing with the morphism jet gives the constant map a
  JetMap jm = morphism_to_jetmap(proj, b, D);
  JetMap down = compose(jm, ls.embedding);
  Point fiber_full = ls.embedding.full_src_basepoint();
  CHECK(down.component(0) == Jet::constant(fiber_full, D, a[0]));
  CHECK(down.component(1).is_zero());
  // ideal generators: u1 - 1 and z1
  REQUIRE(ls.ideal_generators.size() == 2);
  Point src_full{Rational(1), Rational(3), Rational(0), Rational(0)};
  CHECK(ls.ideal_generators[0] ==
        Jet::coordinate(src_full, D, 0) - Jet::constant(src_full, D, 1));
  CHECK(ls.ideal_generators[1] == Jet::coordinate(src_full, D, 2));
}

TEST_CASE("level set rejects a point off the fiber") {
  Morphism proj({1, 0}, {1, 0}, {Fps::smooth_variable(1, 0, D, 0)}, {});
  CHECK(throws_code(errc::fiber_mismatch, [&] {
    level_set(proj, {Rational(2)}, {Rational(1)}, D);
  }));
}

TEST_CASE("level set of a curved standardizable morphism") {
  // (u1 + u2^2 | z1): fiber over 0 is the parabola u1 = -u2^2
  Morphism m({2, 1}, {1, 1},
             {Fps::smooth_variable(2, 1, D, 0) + Fps::smooth_variable(2, 1, D, 1).pow(2)},
             {Fps::formal_variable(2, 1, D, 0)});
  Point b{Rational(0), Rational(0)};
  Point a{Rational(0)};
  LevelSetResult ls = level_set(m, a, b, D);
  CHECK(ls.fiber_n == 1);
  CHECK(ls.fiber_k == 0);
  JetMap jm = morphism_to_jetmap(m, b, D);
  JetMap down = compose(jm, ls.embedding);
  Point fiber_full = ls.embedding.full_src_basepoint();
  CHECK(down.component(0) == Jet::constant(fiber_full, D, Rational(0)));
  CHECK(down.component(1).is_zero());
  // the embedding is an immersion jet: its linear part has full rank
  CHECK(rank(ls.embedding.linear_part()) == 1);
}
