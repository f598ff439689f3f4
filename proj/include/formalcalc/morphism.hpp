#ifndef FORMALCALC_MORPHISM_HPP
#define FORMALCALC_MORPHISM_HPP

#include "formalcalc/fps.hpp"
#include "formalcalc/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace formalcalc {

struct Shape {
  std::size_t n = 0; // smooth dimension
  std::size_t k = 0; // formal degree
  friend bool operator==(const Shape& a, const Shape& b) = default;
};

struct RankTriple {
  std::size_t total = 0;   // Rank(J_b)  = Rank(d phi_b)
  std::size_t reduced = 0; // Rank(F_b)  = Rank(d underline(phi)_b)
  std::size_t formal = 0;  // Rank(H_b)  = Rank(d phi_b^f)
  friend bool operator==(const RankTriple& a, const RankTriple& b) = default;
  std::string to_string() const;
};

// Symbolic Jacobian in block form J = [[F, G], [0, H]]: F is the Jacobian of
// the reduction, G and H collect the coefficients of the z-linear terms of
// the smooth and formal components.
struct JacobianBlocks {
  PolyMat F; // n x n', entries d f_i / d u_{i'}
  PolyMat G; // n x k', z_{j'}-linear coefficient of cx_i
  PolyMat H; // k x k', z_{j'}-linear coefficient of cy_j

  RatMat eval(const Point& b) const; // assembled (n+k) x (n'+k') matrix J_b
};

// d phi_b in the coordinate tangent bases (delta_b o d/du_1, ...,
// delta_b o d/dz_{k'}) and likewise on the target: the Jacobian evaluated at
// b. The lower-left k x n' block is identically zero.
struct DifferentialMatrix {
  RatMat entries;
  std::size_t src_n = 0, src_k = 0, tgt_n = 0, tgt_k = 0;
};

struct ClassifyFlags {
  bool immersion = false;
  bool submersion = false;
  bool regular = false;
  bool bijective_differential = false;
};

// Morphism (N')^(k') -> N^(k) between chart models, represented by the tuple
// of component series (pullbacks of the target coordinate functions). Every
// formal component must have formal order >= 1.
class Morphism {
public:
  Morphism() = default;
  Morphism(Shape src, Shape tgt, std::vector<Fps> cx, std::vector<Fps> cy);

  static Morphism identity(Shape s, unsigned order);

  const Shape& src() const { return src_; }
  const Shape& tgt() const { return tgt_; }
  unsigned order() const { return order_; }
  const std::vector<Fps>& cx() const { return cx_; }
  const std::vector<Fps>& cy() const { return cy_; }

  /// Checks shape coherence and the formal-order invariant of the cy
  /// components; throws ill_formed_morphism naming the violating component.
  void validate() const;

  /// Pullback of a target-chart series through this morphism.
  Fps pullback(const Fps& f) const;

  /// The underlying smooth map applied to a point.
  Point underlying_point(const Point& b) const;

  JacobianBlocks jacobian() const;
  RankTriple rank_at(const Point& b) const;
  DifferentialMatrix differential_at(const Point& b) const;
  ClassifyFlags classify_at(const Point& b) const;

  friend bool operator==(const Morphism& a, const Morphism& b);

private:
  Shape src_, tgt_;
  unsigned order_ = kDefaultOrder;
  std::vector<Fps> cx_, cy_;
};

/// Composition outer o inner; components are pullbacks of the outer
/// components through inner. Result order is the minimum of the two.
Morphism compose(const Morphism& outer, const Morphism& inner);

RankTriple rank_triple_of(const RatMat& J, std::size_t n, std::size_t k,
                          std::size_t np, std::size_t kp);

} // namespace formalcalc

#endif
