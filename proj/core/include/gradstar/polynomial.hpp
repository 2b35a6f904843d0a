#pragma once

// Sparse multivariate polynomials over QQ or ZZ used by the Groebner kernel.
// Terms are kept sorted in strictly decreasing order w.r.t. a TermOrder.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gradstar {

inline constexpr int kMaxVars = 16;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t deg = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg == b.deg && a.exp == b.exp;
  }

  bool is_one() const { return deg == 0; }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other, int nvars) const {
    if (deg > other.deg) return false;
    for (int i = 0; i < nvars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }

  static Monomial mul(const Monomial& a, const Monomial& b, int nvars);
  /// Requires b | a.
  static Monomial div(const Monomial& a, const Monomial& b, int nvars);
  static Monomial lcm(const Monomial& a, const Monomial& b, int nvars);
  static bool coprime(const Monomial& a, const Monomial& b, int nvars);
};

/// Degree-reverse-lexicographic order, optionally preceded by an
/// elimination block on the first `elim` variables (block order).
struct TermOrder {
  int nvars = 0;
  int elim = 0;

  // >0 if a > b, 0 if equal, <0 if a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  std::string tag() const;
};

struct QQ {
  using value_type = mpq_class;
  static constexpr bool is_field = true;
  static constexpr const char* name = "Q";
};

struct ZZ {
  using value_type = mpz_class;
  static constexpr bool is_field = false;
  static constexpr const char* name = "Z";
};

template <class D>
struct Term {
  Monomial mono;
  typename D::value_type coeff;
};

template <class D>
class Poly {
 public:
  using Coeff = typename D::value_type;

  Poly() = default;
  explicit Poly(std::vector<Term<D>> sorted_terms) : terms_(std::move(sorted_terms)) {}

  /// Builds from unsorted terms; combines duplicates and drops zeros.
  static Poly from_terms(std::vector<Term<D>> terms, const TermOrder& ord);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<D>>& terms() const { return terms_; }
  std::vector<Term<D>>& mutable_terms() { return terms_; }

  const Monomial& lm() const { return terms_.front().mono; }
  const Coeff& lc() const { return terms_.front().coeff; }

  bool is_constant() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }
  bool involves_var_below(int k) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }

  /// a - c*m*b, all sorted by `ord`.
  static Poly sub_scaled(const Poly& a, const Coeff& c, const Monomial& m, const Poly& b,
                         const TermOrder& ord);
  static Poly add(const Poly& a, const Poly& b, const TermOrder& ord);
  static Poly mul(const Poly& a, const Poly& b, const TermOrder& ord);
  Poly scaled(const Coeff& c, const Monomial& m, int nvars) const;

  /// Divides by the leading coefficient (QQ) or makes it positive (ZZ).
  void normalize();

  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  std::vector<Term<D>> terms_;
};

extern template class Poly<QQ>;
extern template class Poly<ZZ>;

}  // namespace gradstar
