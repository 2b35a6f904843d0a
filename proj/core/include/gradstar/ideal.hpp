#pragma once

// Finitely generated fractional ideals (1/d)·(g_1, ..., g_m) of a graded
// ring and their arithmetic. Integral parts are lifted to the polynomial
// presentation base[z]/T and decided with the Groebner kernel.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradstar/groebner.hpp"
#include "gradstar/ring.hpp"

namespace gradstar {

namespace detail {
struct IdealCache;
}

class FracIdeal {
 public:
  /// Zero generators are dropped; `den` must be nonzero.
  FracIdeal(RingPtr ring, std::vector<GradedElement> gens, GradedElement den);
  FracIdeal(RingPtr ring, std::vector<GradedElement> gens);

  static FracIdeal unit(RingPtr ring);
  static FracIdeal principal(const HQuotientElement& x);

  const RingPtr& ring() const { return ring_; }
  const GradedElement& denominator() const { return den_; }
  const std::vector<GradedElement>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  /// Every generator and the denominator are homogeneous.
  bool is_homogeneous() const { return homogeneous_; }
  /// Denominator is a unit, so the ideal lies in R.
  bool is_integral() const { return den_.is_unit(); }

  /// Generators as elements g_i / d of R_H.
  std::vector<HQuotientElement> elements() const;
  std::string to_string() const;

 private:
  friend struct IdealAccess;
  RingPtr ring_;
  GradedElement den_;
  std::vector<GradedElement> gens_;
  bool homogeneous_ = true;
  std::shared_ptr<detail::IdealCache> cache_;
};

/// Basis of the lifted integral ideal together with its presentation.
struct GroebnerBasis {
  std::string ordering;
  std::vector<std::string> variables;  // "z1 = t^(..)"
  std::vector<std::string> presentation;
  std::vector<std::string> basis;
  /// Basis elements mapped back into R.
  std::vector<GradedElement> images;
  GroebnerStats stats;
};

/// Only "degrevlex" is accepted as `ordering`.
GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<GradedElement>& gens,
                             const std::string& ordering = "degrevlex");

bool ideal_member(const HQuotientElement& x, const FracIdeal& I);
/// J ⊆ I.
bool ideal_contains(const FracIdeal& I, const FracIdeal& J);
bool ideal_equals(const FracIdeal& I, const FracIdeal& J);
/// I = R.
bool ideal_is_unit(const FracIdeal& I);

FracIdeal ideal_product(const FracIdeal& I, const FracIdeal& J);
FracIdeal ideal_sum(const FracIdeal& I, const FracIdeal& J);
FracIdeal ideal_power(const FracIdeal& I, unsigned n);
/// Intersection of fractional ideals.
FracIdeal ideal_intersection(const FracIdeal& I, const FracIdeal& J);
/// (I : J) = {x in K : xJ ⊆ I}; throws ZeroInput for J = 0.
FracIdeal ideal_colon(const FracIdeal& I, const FracIdeal& J);
/// (R : I).
FracIdeal frac_inverse(const FracIdeal& I);
FracIdeal ideal_scale(const FracIdeal& I, const HQuotientElement& x);

/// Same ideal with generators taken from a Groebner basis of the integral
/// part, redundant monomial generators removed and the denominator
/// cancelled where possible.
FracIdeal compact(const FracIdeal& I);

/// Report order for witnesses: smaller total degree first, then the element
/// whose leading exponent is lexicographically larger (x^2 before y^2).
bool witness_before(const HQuotientElement& a, const HQuotientElement& b);

/// First generator of `from`, in witness order, that is not in `in`.
std::optional<HQuotientElement> first_non_member(const FracIdeal& from, const FracIdeal& in);

/// q with p = h·q in R, if it exists.
std::optional<GradedElement> try_divide(const GradedElement& p, const GradedElement& h);

}  // namespace gradstar
