#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewps/element.hpp"

namespace skewps {

// Canonical, re-parseable renderings. Terms are ordered by filtration degree
// first, then by descending lexicographic exponent vector; coefficients print
// as exact rationals and t-powers, scalars always on the left. parse/eval of
// the output reproduces the value exactly.

std::string print_base_coeff(const BaseCoeff& c);
std::string print_element(const Element& a);  // "0" for the zero element
std::string print_terms(const Presentation& pres, const TermMap& terms);

// Terms of `a` sorted by the canonical monomial order (degree, then
// descending lex on exponents). Used by the printer and the series file
// writer so both emit the same order.
std::vector<std::pair<ExponentVector, BaseCoeff>> canonical_terms(const Element& a);

// Monomial part alone, e.g. "y11^2*y12" ("1" for the empty monomial).
std::string print_monomial(const Presentation& pres, const ExponentVector& e);

}  // namespace skewps
