#pragma once

#include <cstddef>

#include "skewps/presentation.hpp"

namespace skewps {

// Degree s(c, e) = val(c) + e_1 + ... + e_n of a nonzero monomial c * Y^e.
Degree monomial_degree(const BaseCoeff& c, const ExponentVector& e);

// A polynomial of the iterated Ore extension in normal form: a finite map
// from exponent vectors to nonzero base coefficients plus the presentation
// it lives over. Immutable value type.
class Element {
public:
    explicit Element(PresentationPtr p) : pres_(std::move(p)) {}

    static Element zero(PresentationPtr p) { return Element(std::move(p)); }
    static Element one(PresentationPtr p);
    static Element generator(PresentationPtr p, std::size_t g);
    static Element monomial(PresentationPtr p, const ExponentVector& e, const BaseCoeff& c);
    static Element constant(PresentationPtr p, const BaseCoeff& c);
    static Element constant(PresentationPtr p, const Rational& c);
    static Element from_terms(PresentationPtr p, TermMap terms);

    const PresentationPtr& presentation() const { return pres_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Lowest monomial degree; infinity for the zero element.
    Degree min_degree() const;
    // True when every monomial involves only generators below `level`.
    bool supported_below(std::size_t level) const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);  // nf_mul
    friend Element operator*(const BaseCoeff& c, const Element& a);
    friend Element operator*(const Element& a, const BaseCoeff& c);
    friend Element operator*(const Rational& s, const Element& a);
    friend Element operator*(const Element& a, const Rational& s);

    // Same presentation object and equal term maps.
    bool operator==(const Element& other) const;

private:
    PresentationPtr pres_;
    TermMap terms_;
};

inline Degree min_degree(const Element& a) { return a.min_degree(); }

// Ring-endomorphism extension of the level-l tau rules to polynomials
// supported below l: multiplicative on monomials, linear over C. Since
// tau_l(y_j) is a scalar multiple of y_j, each monomial maps to a scalar
// multiple of itself.
Element apply_tau(std::size_t l, const Element& a);

// Left tau_l-derivation extension of the level-l delta rules, by the Leibniz
// recursion on normal-form monomials. Kills C.
Element apply_delta(std::size_t l, const Element& a);

// Exact product in normal form via the structural Ore recursion
// y_l * r = tau_l(r) y_l + delta_l(r).
Element nf_mul(const Element& a, const Element& b);

// The same product computed by repeated adjacent swaps
// y_l y_j -> tau_l(y_j) y_l + delta_l(y_j) on out-of-order generator pairs.
// Independent of nf_mul; the two must agree exactly.
Element single_step_oracle_mul(const Element& a, const Element& b);

namespace detail {

// Engine primitives on raw term maps. `pres` only needs rules below the
// touched levels to be installed, which lets the presentation builder call
// these while normalizing rule expressions level by level.
void add_term(TermMap& m, const ExponentVector& e, const BaseCoeff& c);
void add_into(TermMap& into, const TermMap& from);
TermMap negate(const TermMap& m);
TermMap scalar_mul(const TermMap& m, const BaseCoeff& c);
TermMap scalar_mul(const TermMap& m, const Rational& s);
Degree min_degree(const TermMap& m);
bool supported_below(const TermMap& m, std::size_t level);

// nf(y_g * b) for arbitrary normal-form b.
TermMap gen_times(const Presentation& pres, std::size_t g, const TermMap& b);
// delta_l(Y^e) for e supported below l.
TermMap delta_mono(const Presentation& pres, std::size_t l, const ExponentVector& e);
// nf(Y^e * b).
TermMap mono_times(const Presentation& pres, const ExponentVector& e, TermMap b);
TermMap nf_mul(const Presentation& pres, const TermMap& a, const TermMap& b);
TermMap apply_tau(const Presentation& pres, std::size_t l, const TermMap& a);
TermMap apply_delta(const Presentation& pres, std::size_t l, const TermMap& a);
TermMap oracle_mul(const Presentation& pres, const TermMap& a, const TermMap& b);
// Normalizes a raw rule expression (words in arbitrary order).
TermMap normalize_raw(const Presentation& pres, const std::vector<RawTerm>& expr);

}  // namespace detail

}  // namespace skewps
