#pragma once

// Graded monoid algebras base[Γ] with Γ a finitely generated submonoid of
// Z^k, their elements, polynomials over them in an outer indeterminate X,
// and elements of the homogeneous localization R_H.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gradstar/errors.hpp"
#include "gradstar/polynomial.hpp"

namespace gradstar {

inline constexpr int kMaxDim = 8;

/// A vector in Z^k (k <= kMaxDim); unused slots stay zero.
struct Exponent {
  std::array<std::int32_t, kMaxDim> v{};

  std::int64_t total() const {
    std::int64_t s = 0;
    for (auto x : v) s += x;
    return s;
  }
  friend bool operator==(const Exponent&, const Exponent&) = default;
  Exponent operator+(const Exponent& o) const {
    Exponent r;
    for (int i = 0; i < kMaxDim; ++i) r.v[i] = v[i] + o.v[i];
    return r;
  }
  Exponent operator-(const Exponent& o) const {
    Exponent r;
    for (int i = 0; i < kMaxDim; ++i) r.v[i] = v[i] - o.v[i];
    return r;
  }
  Exponent operator-() const { return Exponent{} - *this; }
  bool is_zero() const { return *this == Exponent{}; }
  std::string to_string(int dim) const;
};

/// Plain lexicographic order.
inline bool lex_less(const Exponent& a, const Exponent& b) { return a.v < b.v; }

/// Degree-lexicographic comparison (total degree first, then lex).
inline int deglex_compare(const Exponent& a, const Exponent& b) {
  auto ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb ? -1 : 1;
  if (a.v == b.v) return 0;
  return a.v < b.v ? -1 : 1;
}

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e.v) h = (h ^ static_cast<std::uint32_t>(x)) * 1099511628211ull;
    return h;
  }
};

enum class BaseDomain { Rationals, Integers };

std::string_view base_name(BaseDomain b);
bool base_contains(BaseDomain b, const mpq_class& c);

/// Finitely generated submonoid of Z^k.
class GradingMonoid {
 public:
  GradingMonoid(int dim, std::vector<Exponent> generators);

  int dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return gens_; }

  /// Nonnegative integer combination of the generators summing to `g`, if
  /// one exists. Breadth-first search over lattice points in a box around
  /// the segment [0, g]; the box margin dim*(M+|g|) suffices by the
  /// Steinitz rearrangement bound, so the search is a decision procedure.
  std::optional<std::vector<std::uint32_t>> decompose(const Exponent& g) const;
  bool contains(const Exponent& g) const { return decompose(g).has_value(); }
  bool is_group() const;

 private:
  int dim_;
  std::vector<Exponent> gens_;
  // Generators are a subset of {±e_i}: decomposition is read off directly.
  bool coordinate_ = false;
};

struct RingSpec {
  std::string name;
  BaseDomain base = BaseDomain::Rationals;
  int dim = 1;
  std::vector<std::vector<long>> monoid_generators;
  std::vector<std::string> flags;
  std::vector<std::string> names;
  /// Rows of a grading map Z^k -> Z^m; empty means the identity (fine grading).
  std::vector<std::vector<long>> grading;
};

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// R = base[Γ] graded by deg(t^γ) = M·γ. Internally presented as
/// base[z_1..z_r]/T with z_i -> t^{g_i} and T the toric ideal of the
/// generators, which is how ideal computations reach the Groebner kernel.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
 public:
  static RingPtr create(RingSpec spec);

  const RingSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  BaseDomain base() const { return spec_.base; }
  int dim() const { return spec_.dim; }
  const GradingMonoid& monoid() const { return monoid_; }
  const std::vector<std::string>& names() const { return spec_.names; }
  bool has_flag(std::string_view flag) const;

  /// True when the grading is the identity (homogeneous = single term).
  bool fine_grading() const { return grading_.empty(); }
  int grade_dim() const { return fine_grading() ? spec_.dim : static_cast<int>(grading_.size()); }
  Exponent grade_of(const Exponent& e) const;

  bool in_monoid(const Exponent& e) const;
  /// -e in Γ as well, so t^e is a unit of R.
  bool is_unit_exponent(const Exponent& e) const;

  // Presentation.
  int num_pvars() const { return static_cast<int>(monoid_.generators().size()); }
  /// Monomial z^c with c a decomposition of e; throws NotInRing.
  Monomial lift(const Exponent& e) const;
  Exponent image(const Monomial& m, int offset = 0) const;
  const std::vector<Poly<QQ>>& toric_q() const { return toric_q_; }
  const std::vector<Poly<ZZ>>& toric_z() const { return toric_z_; }
  std::vector<std::string> pvar_names() const;

 private:
  explicit GradedRing(RingSpec spec, GradingMonoid monoid);
  void compute_presentation();

  RingSpec spec_;
  GradingMonoid monoid_;
  std::vector<std::vector<long>> grading_;
  std::vector<Poly<QQ>> toric_q_;
  std::vector<Poly<ZZ>> toric_z_;
  mutable std::mutex lift_mu_;
  mutable std::unordered_map<Exponent, std::optional<Monomial>, ExponentHash> lift_cache_;
};

/// Element of R: finite map from exponents to nonzero coefficients, stored
/// in decreasing degree-lexicographic order.
class GradedElement {
 public:
  using TermList = std::vector<std::pair<Exponent, mpq_class>>;

  GradedElement() = default;
  explicit GradedElement(RingPtr ring) : ring_(std::move(ring)) {}

  /// Validates membership of every exponent in Γ and every coefficient in
  /// the base domain; combines duplicates.
  static GradedElement from_terms(RingPtr ring, TermList terms);
  static GradedElement constant(RingPtr ring, const mpq_class& c);
  static GradedElement monomial(RingPtr ring, const Exponent& e, const mpq_class& c = 1);

  const RingPtr& ring() const { return ring_; }
  const TermList& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Grade of a nonzero homogeneous element.
  Exponent grade() const;
  /// A unit of R: nonzero base unit times t^e with -e in Γ.
  bool is_unit() const;
  const mpq_class& leading_coeff() const { return terms_.front().second; }

  /// Homogeneous components in increasing lexicographic order of grade.
  std::vector<std::pair<Exponent, GradedElement>> decompose() const;

  GradedElement operator+(const GradedElement& o) const;
  GradedElement operator-(const GradedElement& o) const;
  GradedElement operator-() const;
  GradedElement operator*(const GradedElement& o) const;
  GradedElement scaled(const mpq_class& c) const;
  GradedElement pow(unsigned n) const;

  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  GradedElement(RingPtr ring, TermList sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}
  void check_same_ring(const GradedElement& o) const;

  RingPtr ring_;
  TermList terms_;
};

/// Degree-lexicographic total order on elements (term by term).
int compare_elements(const GradedElement& a, const GradedElement& b);

/// f_0 + f_1 X + ... + f_n X^n over R, trailing zeros trimmed.
class PolyX {
 public:
  PolyX() = default;
  explicit PolyX(RingPtr ring) : ring_(std::move(ring)) {}
  PolyX(RingPtr ring, std::vector<GradedElement> coeffs);
  static PolyX constant(const GradedElement& a);

  const RingPtr& ring() const { return ring_; }
  const std::vector<GradedElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree in X; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  GradedElement coeff(std::size_t i) const;

  PolyX operator+(const PolyX& o) const;
  PolyX operator-(const PolyX& o) const;
  PolyX operator-() const;
  PolyX operator*(const PolyX& o) const;
  PolyX operator*(const GradedElement& a) const;
  /// Multiplies by X^n.
  PolyX shifted(unsigned n) const;

  friend bool operator==(const PolyX& a, const PolyX& b) { return a.coeffs_ == b.coeffs_; }
  std::string to_string() const;

 private:
  void trim();
  RingPtr ring_;
  std::vector<GradedElement> coeffs_;
};

/// Coefficient-wise product; throws RingMismatch across rings.
PolyX poly_mul(const PolyX& f, const PolyX& g);

/// f~(X, Y) in base[X, Y_1^±, ..., Y_k^±]: every term c·t^γ of the
/// coefficient f_i becomes c·Y^γ·X^i.
struct Polynomialized {
  struct Entry {
    int x_degree;
    Exponent y_exp;
    mpq_class coeff;
  };
  RingPtr ring;
  std::vector<Entry> entries;

  /// Generators of the classical content of f~ mapped back into R. Terms
  /// sharing an X-degree and a grade are summed, so the list coincides with
  /// the homogeneous components generating A_f.
  std::vector<GradedElement> content_generators() const;
  std::string to_string() const;
};

Polynomialized polynomialize(const PolyX& f);

/// numerator / denominator in R_H; the denominator is nonzero.
class HQuotientElement {
 public:
  HQuotientElement() = default;
  HQuotientElement(GradedElement num);  // NOLINT(google-explicit-constructor)
  HQuotientElement(GradedElement num, GradedElement den);

  const GradedElement& numerator() const { return num_; }
  const GradedElement& denominator() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  HQuotientElement operator*(const HQuotientElement& o) const;
  HQuotientElement operator+(const HQuotientElement& o) const;
  HQuotientElement inverse() const;

  /// Canonical representative. When the class has a monomial denominator
  /// the result is unique: the element is rewritten as a Laurent polynomial
  /// over Q with exponents in <Γ> and re-split as num / (c·t^δ) with the
  /// smallest δ = N·Σg_i that clears exponents and c the positive lcm of
  /// coefficient denominators (1 over Q). Otherwise only scalars are
  /// normalized.
  HQuotientElement normalized() const;

  friend bool operator==(const HQuotientElement& a, const HQuotientElement& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  std::string to_string() const;

 private:
  GradedElement num_;
  GradedElement den_;
};

}  // namespace gradstar
