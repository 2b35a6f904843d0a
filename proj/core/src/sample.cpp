#include "gradstar/sample.hpp"

namespace gradstar {

long Sampler::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

mpq_class Sampler::coeff() {
  long a = uniform(1, 10);
  a = a <= 5 ? -a : a - 5;
  if (ring_->base() == BaseDomain::Integers) return a;
  mpq_class q(a, uniform(1, 3));
  q.canonicalize();
  return q;
}

Exponent Sampler::exponent(int steps) {
  const auto& gens = ring_->monoid().generators();
  Exponent e;
  long n = uniform(0, steps);
  for (long i = 0; i < n; ++i)
    e = e + gens[static_cast<std::size_t>(uniform(0, static_cast<long>(gens.size()) - 1))];
  return e;
}

GradedElement Sampler::homogeneous(int steps) {
  Exponent e = exponent(steps);
  GradedElement::TermList terms{{e, coeff()}};
  if (!ring_->fine_grading() && uniform(0, 1) == 1) {
    // Another exponent of the same grade: move one unit between coordinates.
    for (int i = 0; i < ring_->dim(); ++i) {
      if (e.v[i] > 0) {
        Exponent f = e;
        f.v[i] -= 1;
        f.v[(i + 1) % ring_->dim()] += 1;
        if (ring_->in_monoid(f) && ring_->grade_of(f) == ring_->grade_of(e)) terms.emplace_back(f, coeff());
        break;
      }
    }
  }
  GradedElement a = GradedElement::from_terms(ring_, std::move(terms));
  return a.is_zero() ? GradedElement::monomial(ring_, e, coeff()) : a;
}

GradedElement Sampler::element(int max_components) {
  GradedElement a(ring_);
  long n = uniform(1, max_components);
  for (long i = 0; i < n; ++i) a = a + homogeneous();
  return a;
}

PolyX Sampler::poly(int max_degree) {
  long deg = uniform(0, max_degree);
  std::vector<GradedElement> cs;
  for (long i = 0; i <= deg; ++i) cs.push_back(uniform(0, 3) == 0 ? GradedElement(ring_) : element());
  while (cs.back().is_zero()) cs.back() = element();
  return PolyX(ring_, std::move(cs));
}

FracIdeal Sampler::ideal(int ngens, int steps) {
  std::vector<GradedElement> gens;
  for (int i = 0; i < ngens; ++i) gens.push_back(homogeneous(steps));
  return FracIdeal(ring_, std::move(gens));
}

}  // namespace gradstar
