#pragma once

// Seeded random inputs. Integers are drawn from mt19937_64 by plain modular
// reduction so the stream does not depend on the standard library's
// distribution implementations.

#include <cstdint>
#include <random>

#include "gradstar/ideal.hpp"

namespace gradstar {

class Sampler {
 public:
  Sampler(RingPtr ring, std::uint64_t seed) : ring_(std::move(ring)), rng_(seed) {}

  const RingPtr& ring() const { return ring_; }

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  /// Nonzero: [-5, 5] over Z, a/b with b <= 3 over Q.
  mpq_class coeff();
  /// Sum of up to `steps` monoid generators.
  Exponent exponent(int steps = 2);
  /// Nonzero homogeneous element. Under a coarse grading it may have two
  /// terms of the same grade.
  GradedElement homogeneous(int steps = 2);
  /// Up to three homogeneous components.
  GradedElement element(int max_components = 3);
  /// Nonzero, X-degree <= max_degree, nonzero leading coefficient.
  PolyX poly(int max_degree = 3);
  FracIdeal ideal(int ngens = 2, int steps = 2);

 private:
  RingPtr ring_;
  std::mt19937_64 rng_;
};

}  // namespace gradstar
