#ifndef FORMALCALC_JETMAP_HPP
#define FORMALCALC_JETMAP_HPP

#include "formalcalc/jet.hpp"
#include "formalcalc/linalg.hpp"
#include "formalcalc/morphism.hpp"

#include <cstddef>
#include <vector>

namespace formalcalc {

// Truncated local homomorphism between formal stalks, given by the jets of
// the coordinate images. Components live at the source basepoint, in the
// shifted variables (u - b, z); formal components have zero constant term,
// smooth components have the target basepoint coordinates as constant terms.
class JetMap {
public:
  JetMap() = default;
  JetMap(Shape src, Shape tgt, Point src_base, Point tgt_base,
         std::vector<Jet> components, unsigned order);

  static JetMap identity(Shape s, const Point& base, unsigned order);

  const Shape& src() const { return src_; }
  const Shape& tgt() const { return tgt_; }
  /// Smooth source basepoint (length src.n); formal coordinates sit at 0.
  const Point& src_basepoint() const { return src_base_; }
  const Point& tgt_basepoint() const { return tgt_base_; }
  unsigned order() const { return order_; }
  const std::vector<Jet>& components() const { return comps_; }
  const Jet& component(std::size_t i) const { return comps_[i]; }

  /// Full basepoint including zero formal coordinates, length src.n + src.k.
  Point full_src_basepoint() const;

  /// Applies the map to a jet at the target basepoint: g |-> g o this.
  Jet pull(const Jet& g) const;

  /// Linear part at the basepoint as an (n+k) x (n'+k') matrix.
  RatMat linear_part() const;

  JetMap truncated(unsigned new_order) const;

  friend bool operator==(const JetMap& a, const JetMap& b);

private:
  Shape src_, tgt_;
  Point src_base_, tgt_base_;
  unsigned order_ = kDefaultOrder;
  std::vector<Jet> comps_;
};

/// Composition outer o inner (inner.tgt must match outer.src, basepoints
/// included); result order is the minimum of the two.
JetMap compose(const JetMap& outer, const JetMap& inner);

/// Taylor-expands every component of m at b: the induced map of formal
/// stalks phi_b, truncated at total degree D.
JetMap morphism_to_jetmap(const Morphism& m, const Point& b, unsigned order);

/// Two-sided inverse modulo total degree > order, computed degree by degree.
/// Requires a square shape and an invertible linear part.
JetMap jet_invert(const JetMap& j, unsigned order);

} // namespace formalcalc

#endif
