#ifndef FORMALCALC_SUBMANIFOLD_HPP
#define FORMALCALC_SUBMANIFOLD_HPP

#include "formalcalc/localforms.hpp"
#include "formalcalc/morphism.hpp"

#include <cstddef>
#include <vector>

namespace formalcalc {

// The (n', r, k')-slice of N^(k): the model closed embedding
// (N')^(k') -> N^(k) whose pullback is Taylor expansion in the sliced-off
// smooth variables.
struct SliceSpec {
  std::size_t n = 0, n_prime = 0, r = 0, k = 0, k_prime = 0;

  /// Enforces r <= n - n', r <= k', k' - r <= k.
  void validate() const;

  std::size_t r1() const { return n_prime; }
  std::size_t r2() const { return r; }
  std::size_t r3() const { return k_prime - r; }
};

Morphism make_slice(const SliceSpec& spec, unsigned order);

/// Pullback along the slice computed by the Taylor-expansion formula
/// (coefficients differentiated in the sliced-off variables, divided by
/// factorials, restricted to the slice). Coincides with
/// make_slice(spec).pullback(f).
Fps slice_pullback(const SliceSpec& spec, const Fps& f);

/// Exact section of slice_pullback: reassembles each z-coefficient of g as a
/// polynomial in the sliced-off smooth variables times a y-monomial.
Fps borel_preimage(const SliceSpec& spec, const Fps& g, unsigned order);

/// Membership in the slice defining ideal ker zeta*, up to f's order.
bool ideal_membership(const SliceSpec& spec, const Fps& f);

struct LevelSetResult {
  std::size_t fiber_n = 0; // n' - r1
  std::size_t fiber_k = 0; // k' - r2 - r3
  JetMap embedding;        // immersion jet of the fiber at the given point
  std::vector<Jet> ideal_generators; // truncated generators of I' at b
  StandardizationResult standardization;
};

/// Level set phi^{-1}(a) at the fiber point b: standardizes phi at b and
/// emits the local slice model of the fiber, its embedding jet and the
/// truncated generators of the defining ideal.
LevelSetResult level_set(const Morphism& m, const Point& a, const Point& b,
                         unsigned order);

} // namespace formalcalc

#endif
