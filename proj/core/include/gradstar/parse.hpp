#pragma once

// Expression grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer | name | 'X' | '(' expr ')'
// Names are the ring's coordinate names; X is the outer indeterminate.
// Division and negative powers are allowed by single-term values only.
// Ideal literals: '(' expr (',' expr)* ')' ['/' atom].

#include <string_view>

#include "gradstar/ideal.hpp"
#include "gradstar/ring.hpp"

namespace gradstar {

PolyX parse_poly(std::string_view text, const RingPtr& ring);
/// Rejects X.
GradedElement parse_element(std::string_view text, const RingPtr& ring);
/// Laurent expressions are brought into R_H with a monomial denominator.
HQuotientElement parse_quotient(std::string_view text, const RingPtr& ring);
FracIdeal parse_ideal(std::string_view text, const RingPtr& ring);

}  // namespace gradstar
