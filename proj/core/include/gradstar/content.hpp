#pragma once

// Homogeneous content ideals and the identities built on them.

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "gradstar/errors.hpp"
#include "gradstar/evidence.hpp"
#include "gradstar/star.hpp"

namespace gradstar {

/// Ideal generated by the homogeneous components of a; throws ZeroInput.
FracIdeal content_C(const GradedElement& a);
/// Sum of content_C over the coefficients of f; throws ZeroInput.
FracIdeal content_A(const PolyX& f);
/// Ideal generated by the coefficients themselves (the ungraded content).
FracIdeal classical_content(const PolyX& f);

/// Raised when no Dedekind-Mertens exponent is found up to the cap. The
/// exponent exists, so this reports an undersized cap.
class CapExceeded : public Error {
 public:
  CapExceeded(int cap, nlohmann::json trace)
      : Error("cap_exceeded", "no exponent m <= " + std::to_string(cap) + " found"),
        trace_(std::move(trace)) {}
  const nlohmann::json& trace() const { return trace_; }

 private:
  nlohmann::json trace_;
};

/// Smallest m in [1, cap] with A_f^{m+1} A_g = A_f^m A_{fg}.
int dm_exponent(const PolyX& f, const PolyX& g, int cap = 8);

struct GaussResult {
  bool equal = false;
  FracIdeal lhs;  // (A_f A_g)^s
  FracIdeal rhs;  // (A_fg)^s
  /// Member of one side missing from the other, when unequal.
  std::optional<HQuotientElement> witness;

  nlohmann::json to_json() const;
};

/// (A_f A_g)^s = (A_fg)^s, or with no closure when `s` is empty.
GaussResult gauss_check(const PolyX& f, const PolyX& g, const std::optional<StarOp>& s = std::nullopt);

/// (a, b)^2 = (a^2, b^2); both inputs homogeneous.
bool square_identity_check(const GradedElement& a, const GradedElement& b);

/// Polynomial over R_H written as num / den with den homogeneous.
struct RHPoly {
  PolyX num;
  GradedElement den;
};

/// For each probe q (f·q must lie in R[X]) checks every coefficient of q
/// against A_f^{-1}; also checks that f·u lies in R[X] for each generator u
/// of A_f^{-1}. Throws InvalidArgument for a probe with f·q outside R[X].
EvidenceReport content_colon_check(const PolyX& f, const std::vector<RHPoly>& probes);

}  // namespace gradstar
