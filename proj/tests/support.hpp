#pragma once

#include <string>

#include "gradstar/parse.hpp"
#include "gradstar/registry.hpp"

namespace gstest {

using namespace gradstar;

inline RingPtr laurent() { return ring_named("laurent_z"); }
inline RingPtr q2() { return ring_named("poly_q2"); }
inline RingPtr q2fine() { return ring_named("poly_q2_fine"); }
inline RingPtr veronese() { return ring_named("veronese_q"); }

inline GradedElement el(const RingPtr& r, const std::string& s) { return parse_element(s, r); }
inline PolyX px(const RingPtr& r, const std::string& s) { return parse_poly(s, r); }
inline FracIdeal id(const RingPtr& r, const std::string& s) { return parse_ideal(s, r); }
inline HQuotientElement q(const RingPtr& r, const std::string& s) { return parse_quotient(s, r); }

}  // namespace gstest

#include <random>

namespace gstest {

/// Exponent built from up to `steps` random monoid generators.
inline Exponent random_exponent(std::mt19937_64& rng, const RingPtr& r, int steps) {
  const auto& gens = r->monoid().generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> count(0, steps);
  Exponent e;
  int n = count(rng);
  for (int i = 0; i < n; ++i) e = e + gens[pick(rng)];
  return e;
}

inline mpq_class random_coeff(std::mt19937_64& rng, const RingPtr& r) {
  std::uniform_int_distribution<int> c(-5, 5), d(1, 3);
  int a = c(rng);
  if (a == 0) a = 1;
  if (r->base() == BaseDomain::Integers) return a;
  mpq_class q(a, d(rng));
  q.canonicalize();
  return q;
}

/// Nonzero homogeneous element: a term, or for coarse gradings a sum of
/// terms sharing a grade.
inline GradedElement random_homogeneous(std::mt19937_64& rng, const RingPtr& r, int steps) {
  Exponent e = random_exponent(rng, r, steps);
  GradedElement::TermList terms{{e, random_coeff(rng, r)}};
  if (!r->fine_grading() && e.total() > 0) {
    // Move one unit of degree between the two coordinates.
    Exponent f = e;
    for (int i = 0; i < r->dim(); ++i) {
      if (f.v[i] > 0) {
        f.v[i] -= 1;
        f.v[(i + 1) % r->dim()] += 1;
        break;
      }
    }
    if (std::uniform_int_distribution<int>(0, 1)(rng)) terms.emplace_back(f, random_coeff(rng, r));
  }
  return GradedElement::from_terms(r, std::move(terms));
}

inline FracIdeal random_homogeneous_ideal(std::mt19937_64& rng, const RingPtr& r, int ngens,
                                          int steps) {
  std::vector<GradedElement> gens;
  for (int i = 0; i < ngens; ++i) gens.push_back(random_homogeneous(rng, r, steps));
  return FracIdeal(r, std::move(gens));
}

}  // namespace gstest
