#pragma once

#include <string>
#include <vector>

#include "skewps/element.hpp"

namespace skewps {

// Largest accepted '^' exponent (and digit count guard for exponents);
// anything above is rejected with a ParseError.
inline constexpr unsigned kMaxExponent = 100000;

// Expression tree over a presentation. Grammar (whitespace-insensitive,
// '*' optional between factors, products stay in written order):
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := factor ('*'? factor)*
//   factor  := primary ('^' nat)*
//   primary := rational | 't' | generator | '(' expr ')'
//   rational:= nat ('/' nat)?
struct ExprAst {
    enum class Kind { Sum, Product, Power, Generator, Scalar, CentralVar };
    Kind kind = Kind::Scalar;
    std::vector<ExprAst> children;  // Sum and Product operands; Power base
    std::vector<int> signs;         // Sum only: +1 / -1 per child
    unsigned exponent = 0;          // Power
    std::size_t generator = 0;      // Generator index in the presentation
    Rational scalar;                // Scalar
};

// Parses against a presentation; generator names are resolved here and 't'
// is only accepted over a CentralSeries base. Throws ParseError (with byte
// position) or UnknownGeneratorError.
ExprAst parse(const std::string& src, const Presentation& pres);

// Folds the tree through normal-form arithmetic.
Element eval(const ExprAst& ast, const PresentationPtr& pres);

Element parse_element(const std::string& src, const PresentationPtr& pres);

// Scalar-only variant used by series files: rationals and t-powers, no
// generators.
BaseCoeff parse_base_coeff(const std::string& src, BaseRing ring);

}  // namespace skewps
