#pragma once

// Closure oracles on finitely generated fractional ideals: d, v, t, the
// w alias of t on rings flagged pvmd, and ⋆_a over a finite catalog.

#include <string>
#include <tuple>
#include <vector>

#include "gradstar/evidence.hpp"
#include "gradstar/ideal.hpp"

namespace gradstar {

enum class StarKind { D, V, T, WAlias, StarA };

class StarOp {
 public:
  static StarOp d(RingPtr ring);
  static StarOp v(RingPtr ring);
  static StarOp t(RingPtr ring);
  /// Throws Unsupported unless the ring carries the pvmd flag.
  static StarOp w_alias(RingPtr ring);
  /// ⋆_a of `base` over the default catalog of bound `bound`.
  static StarOp star_a(RingPtr ring, int bound, StarKind base = StarKind::D);
  /// "d", "v", "t", "w", "star_a:N" or "star_a:N:<base>".
  static StarOp parse(const std::string& name, RingPtr ring);

  StarKind kind() const { return kind_; }
  StarKind base() const { return base_; }
  int bound() const { return bound_; }
  const RingPtr& ring() const { return ring_; }
  std::string name() const;
  /// The operation ⋆_a applies its base closure with.
  StarOp base_op() const;

 private:
  StarOp(StarKind kind, RingPtr ring, int bound = 0, StarKind base = StarKind::D)
      : kind_(kind), base_(base), bound_(bound), ring_(std::move(ring)) {}
  StarKind kind_;
  StarKind base_;
  int bound_;
  RingPtr ring_;
};

FracIdeal star_apply(const StarOp& s, const FracIdeal& I);

/// R, then every two-generator ideal (c1·t^a, c2·t^b) with |a|_1, |b|_1 <= N,
/// up to scaling by elements of R_H; principal ideals other than R are
/// skipped since they contribute nothing. Coefficients range over {1,2,3}
/// for Z and {1} for Q.
std::vector<FracIdeal> default_catalog(const RingPtr& ring, int bound);

/// Ideal generated by the union over H in `catalog` of ((IH)^s : H^s).
FracIdeal star_a_bounded(const StarOp& s, const FracIdeal& I, const std::vector<FracIdeal>& catalog);

/// For each (E, F, G) with (EF)^s ⊆ (EG)^s, whether F^s ⊆ G^s.
EvidenceReport eab_evidence(const StarOp& s,
                            const std::vector<std::tuple<FracIdeal, FracIdeal, FracIdeal>>& samples);

struct AxiomSample {
  FracIdeal E;
  FracIdeal F;  // expected to contain E
  GradedElement x;  // nonzero homogeneous
};

/// Scaling, monotonicity, extensivity, idempotence and d <= s <= v.
EvidenceReport star_axiom_check(const StarOp& s, const std::vector<AxiomSample>& samples);

}  // namespace gradstar
