#include "formalcalc/multiindex.hpp"

namespace formalcalc {

namespace {

void enumerate(std::size_t arity, unsigned d, std::size_t pos, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
  if (pos + 1 == arity) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= d; ++e) {
    cur[pos] = e;
    enumerate(arity, d - e, pos + 1, cur, out);
  }
}

} // namespace

std::vector<MultiIndex> indices_of_degree(std::size_t arity, unsigned d) {
  std::vector<MultiIndex> out;
  if (arity == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  MultiIndex cur(arity, 0);
  enumerate(arity, d, 0, cur, out);
  return out;
}

std::vector<MultiIndex> positive_indices_up_to(std::size_t arity, unsigned max_degree) {
  std::vector<MultiIndex> out;
  for (unsigned d = 1; d <= max_degree; ++d) {
    auto layer = indices_of_degree(arity, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

} // namespace formalcalc
