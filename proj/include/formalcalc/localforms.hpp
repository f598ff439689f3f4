#ifndef FORMALCALC_LOCALFORMS_HPP
#define FORMALCALC_LOCALFORMS_HPP

#include "formalcalc/jetmap.hpp"
#include "formalcalc/morphism.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace formalcalc {

// Largest linear-system side the exact kernel computations will attempt.
inline constexpr std::size_t kDefaultMatrixSideCap = 5000;

struct ConstantRankResult {
  bool constant = false;
  RankTriple triple;
};

/// Rank triple at b plus a symbolic constancy verdict: the rank triple is
/// constant near b iff every minor one larger than the rank vanishes
/// identically, for each of F, H and the assembled J.
ConstantRankResult constant_rank_check(const Morphism& m, const Point& b);

struct RankNormalForm {
  JetMap theta_tgt;   // target chart change (jets at phi_bar(b))
  JetMap theta_src;   // source chart change (jets at b)
  JetMap conjugated;  // theta_tgt o phi_b o theta_src^{-1}
  RankTriple triple;
  std::size_t r1 = 0, r2 = 0, r3 = 0;
};

/// Constructive constant-rank normal form at b: coordinate changes bringing
/// phi_b to the shape (u_1..u_r1, g_*, z_1..z_r2 | z_{r2+1}..z_{r2+r3}, h_*)
/// with every g, h of formal order >= 1. Throws not_constant_rank if the
/// symbolic constancy check fails at b.
RankNormalForm rank_normal_form(const Morphism& m, const Point& b, unsigned order);

enum class CertVerdict { surjective_at_order, not_surjective };

struct KernelLift {
  std::vector<Rational> degree_one; // a basis vector of ker phi*_{b,2}
  std::optional<Jet> lift;          // truncated kernel element with that linear part
};

// Order-D certificate for surjectivity of the kernel map phi*_{b,k}.
// not_surjective is conclusive (a true kernel element would truncate into
// the truncated kernel); the positive verdict is evidence at this order.
struct KernelCertificate {
  unsigned order = 0;
  std::size_t dim_ker_deg2 = 0;
  std::vector<KernelLift> lifted;
  CertVerdict verdict = CertVerdict::surjective_at_order;
};

KernelCertificate kernel_surjectivity_certificate(
    const Morphism& m, const Point& b, unsigned order,
    std::size_t matrix_side_cap = kDefaultMatrixSideCap);

struct StandardizationResult {
  RankTriple triple;
  std::size_t r1 = 0, r2 = 0, r3 = 0;
  JetMap target_chart_change;
  JetMap source_chart_change;
  JetMap standardized; // coordinate projection/inclusion shape
  unsigned residual = 0;
};

/// Full standardization at b: constant-rank normal form plus elimination of
/// the residual g, h components through the image subalgebra. Throws
/// not_constant_rank or not_standardizable (the latter carries the
/// refutation witness in its message).
StandardizationResult standardize(const Morphism& m, const Point& b, unsigned order,
                                  std::size_t matrix_side_cap = kDefaultMatrixSideCap);

/// Jet-level local section at a = phi_bar(b) of a regular submersion:
/// phi_b o section = identity modulo total degree > order.
JetMap local_section(const Morphism& m, const Point& b, unsigned order);

/// The graded map on m^r/m^(r+1): f (with all formal degrees exactly r) is
/// sent to sum_J reduction_pullback(f_J) * H(z^J), truncated to formal
/// degree exactly r.
Fps graded_component_map(const Morphism& m, unsigned r, const Fps& f);

/// Whether the truncated stalk map phi*_b is surjective onto
/// m'_b/m'^(s+1)_b (monomial-basis matrix rank check).
bool truncated_pullback_surjective(const Morphism& m, const Point& b, unsigned s,
                                   std::size_t matrix_side_cap = kDefaultMatrixSideCap);

} // namespace formalcalc

#endif
