#pragma once

// Buchberger's algorithm over QQ (reduced bases) and over ZZ (strong bases
// from S- and G-polynomials with Euclidean coefficient reduction).

#include <cstddef>
#include <vector>

#include "gradstar/polynomial.hpp"

namespace gradstar {

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Full normal form of `p` with respect to `basis`. Over ZZ a term c*m is
/// reduced by g when lm(g) | m and c leaves a different residue in
/// [0, |lc(g)|); for a strong basis this is zero exactly on ideal members.
template <class D>
Poly<D> normal_form(Poly<D> p, const std::vector<Poly<D>>& basis, const TermOrder& ord);

/// Reduced Groebner basis (QQ) or reduced strong Groebner basis (ZZ) of the
/// ideal generated by `input`. The result is canonical for a fixed order.
template <class D>
std::vector<Poly<D>> groebner(std::vector<Poly<D>> input, const TermOrder& ord,
                              GroebnerStats* stats = nullptr);

extern template Poly<QQ> normal_form(Poly<QQ>, const std::vector<Poly<QQ>>&, const TermOrder&);
extern template Poly<ZZ> normal_form(Poly<ZZ>, const std::vector<Poly<ZZ>>&, const TermOrder&);
extern template std::vector<Poly<QQ>> groebner(std::vector<Poly<QQ>>, const TermOrder&,
                                               GroebnerStats*);
extern template std::vector<Poly<ZZ>> groebner(std::vector<Poly<ZZ>>, const TermOrder&,
                                               GroebnerStats*);

}  // namespace gradstar
