#ifndef FORMALCALC_MULTIINDEX_HPP
#define FORMALCALC_MULTIINDEX_HPP

#include <cstddef>
#include <vector>

namespace formalcalc {

// Exponent multi-index. Length is the variable count of the owning object.
using MultiIndex = std::vector<unsigned>;

inline unsigned total_degree(const MultiIndex& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

// Graded-lexicographic order: first by total degree, then lexicographically.
// Every term map in the library is keyed with this comparator so that
// iteration order (and hence all printed output) is deterministic.
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

inline MultiIndex unit_index(std::size_t arity, std::size_t pos) {
  MultiIndex m(arity, 0);
  m[pos] = 1;
  return m;
}

/// All multi-indices of the given arity with total degree exactly d,
/// in lexicographic order.
std::vector<MultiIndex> indices_of_degree(std::size_t arity, unsigned d);

/// All multi-indices with 1 <= |I| <= max_degree, in grlex order.
/// This is the monomial basis of the truncated maximal ideal.
std::vector<MultiIndex> positive_indices_up_to(std::size_t arity, unsigned max_degree);

} // namespace formalcalc

#endif
