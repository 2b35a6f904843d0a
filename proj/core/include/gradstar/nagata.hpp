#pragma once

// Nagata and Kronecker fractions over R[X], kept as predicates plus
// re-checkable certificates rather than as ring objects.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gradstar/content.hpp"
#include "gradstar/evidence.hpp"
#include "gradstar/star.hpp"

namespace gradstar {

/// f != 0 and A_f^s = R.
bool n_membership(const PolyX& f, const StarOp& s);

/// fg in N(s) exactly when f and g are.
EvidenceReport n_saturation_check(const std::vector<std::pair<PolyX, PolyX>>& samples, const StarOp& s);

/// 1 in (I·I^{-1})^s.
bool is_star_invertible(const FracIdeal& I, const StarOp& s);

/// The closure standing in for the stable operation attached to s: d for d,
/// and t (= w) for v, t and w on rings flagged pvmd. Throws Unsupported
/// otherwise.
StarOp tilde_of(const StarOp& s);

/// f_1 + f_2 X^{∂f_1+1} + ...: pieces occupy disjoint X-ranges, so the
/// content is the sum of the contents.
PolyX pic_generator(const std::vector<PolyX>& fs);

struct NagataFraction {
  PolyX num;
  PolyX den;
  StarOp star;

  /// Throws InvalidArgument unless den is in N(s).
  static NagataFraction make(PolyX num, PolyX den, StarOp s);
  bool validate() const { return n_membership(den, star); }
  friend bool operator==(const NagataFraction& a, const NagataFraction& b) {
    return poly_mul(a.num, b.den) == poly_mul(b.num, a.den);
  }
};

struct KroneckerFraction {
  PolyX num;
  PolyX den;
  StarOp star;
  /// Direct certificate A_f ⊆ A_g^s; otherwise aux_h with A_f A_h ⊆ (A_g A_h)^s.
  bool direct = true;
  PolyX aux_h;
  int bound = 0;

  bool validate() const;
  nlohmann::json to_json() const;
};

enum class KrMode { Eab, General };
enum class Verdict { Yes, No, NotFoundAtBound };

std::string verdict_name(Verdict v);

struct KrResult {
  Verdict verdict = Verdict::No;
  std::optional<KroneckerFraction> fraction;
  nlohmann::json to_json() const;
};

/// Eab mode decides A_f ⊆ A_g^s and relies on the caller knowing that s is
/// e.a.b. on the ring. General mode looks for h with A_h among R, the
/// default catalog of the given bound and pairwise products of catalog
/// entries.
KrResult kr_member(const PolyX& f, const PolyX& g, const StarOp& s, KrMode mode = KrMode::General,
                   int bound = 3);

struct BezoutResult {
  unsigned n = 1;
  KroneckerFraction gamma;   // (f + X^n g) / h
  KroneckerFraction f_over;  // f / (f + X^n g)
  KroneckerFraction g_over;  // g / (f + X^n g)
  bool valid = false;
  nlohmann::json to_json() const;
};

/// alpha = f/h and beta = g/h with a shared denominator and g != 0.
BezoutResult bezout_combine(const KroneckerFraction& alpha, const KroneckerFraction& beta);

/// For each generator a of A_f, looks for d in N(s) and u in R[X] with
/// a·d = u·f and deg d <= bound. When A_f is not s-invertible, finding a
/// witness for every generator would contradict the theory and is a failure.
EvidenceReport corC_evidence(const PolyX& f, const StarOp& s, int bound = 6);

/// Per probe x: x in I^{tilde s} against a witness d in N(s) with x·d in
/// I·R[X] and deg d <= bound.
EvidenceReport ext_contract_evidence(const FracIdeal& I, const StarOp& s,
                                     const std::vector<HQuotientElement>& probes, int bound = 6);

struct GpReport {
  std::string ring;
  std::string star;
  bool counterexample_found = false;
  nlohmann::json counterexample;
  EvidenceReport evidence;
  nlohmann::json to_json() const;
};

/// Sampled Gauss identity under the tilde closure, invertibility of
/// two-generator monomial ideals, and I^{tilde} against its bounded ⋆_a.
GpReport gp_evidence(const RingPtr& ring, const StarOp& s, int budget = 40, std::uint64_t seed = 1);

}  // namespace gradstar
