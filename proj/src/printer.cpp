#include "skewps/printer.hpp"

#include <algorithm>
#include <sstream>

namespace skewps {

namespace {

// Degree first, then descending lex on exponents. Tie on both only happens
// for distinct t-strata of one exponent vector, which sort by t-exponent.
struct TermKey {
    std::uint64_t s;
    const ExponentVector* e;
    unsigned t_exp;
};

bool key_less(const TermKey& a, const TermKey& b) {
    if (a.s != b.s) return a.s < b.s;
    if (*a.e != *b.e) return *a.e > *b.e;
    return a.t_exp < b.t_exp;
}

std::string print_t_power(unsigned k) {
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
}

// One printed addend: |q| * t^k * Y^e with the sign handled by the caller.
std::string print_magnitude(const Presentation& pres, const Rational& q, unsigned k,
                            const ExponentVector& e) {
    Rational mag = q < 0 ? Rational(-q) : q;
    std::vector<std::string> factors;
    if (!(mag == 1) || (k == 0 && is_zero_vector(e))) factors.push_back(to_string(mag));
    std::string tail;
    if (k > 0) tail = print_t_power(k);
    if (!is_zero_vector(e)) {
        std::string mono = print_monomial(pres, e);
        tail = tail.empty() ? mono : tail + "*" + mono;
    }
    if (tail.empty()) return factors.empty() ? "1" : factors[0];
    if (factors.empty()) return tail;
    return factors[0] + " * " + tail;
}

}  // namespace

std::string print_monomial(const Presentation& pres, const ExponentVector& e) {
    std::string out;
    for (std::size_t g = 0; g < e.size(); ++g) {
        if (e[g] == 0) continue;
        if (!out.empty()) out += "*";
        out += pres.name(g);
        if (e[g] > 1) out += "^" + std::to_string(e[g]);
    }
    return out.empty() ? "1" : out;
}

std::vector<std::pair<ExponentVector, BaseCoeff>> canonical_terms(const Element& a) {
    std::vector<std::pair<ExponentVector, BaseCoeff>> terms(a.terms().begin(), a.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        TermKey kx{monomial_degree(x.second, x.first).value(), &x.first, 0};
        TermKey ky{monomial_degree(y.second, y.first).value(), &y.first, 0};
        return key_less(kx, ky);
    });
    return terms;
}

std::string print_base_coeff(const BaseCoeff& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [k, q] : c.terms()) {
        bool neg = q < 0;
        Rational mag = neg ? Rational(-q) : q;
        std::string piece;
        if (k == 0) {
            piece = to_string(mag);
        } else if (mag == 1) {
            piece = print_t_power(k);
        } else {
            piece = to_string(mag) + "*" + print_t_power(k);
        }
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

std::string print_element(const Element& a) { return print_terms(*a.presentation(), a.terms()); }

std::string print_terms(const Presentation& pres, const TermMap& terms) {
    if (terms.empty()) return "0";

    // Split coefficients into single t-powers so no parentheses are needed.
    struct Addend {
        TermKey key;
        Rational q;
        const ExponentVector* e;
    };
    std::vector<Addend> addends;
    for (const auto& [e, c] : terms) {
        const std::uint64_t base = total_exponent(e);
        for (const auto& [k, q] : c.terms())
            addends.push_back({TermKey{base + k, &e, k}, q, &e});
    }
    std::sort(addends.begin(), addends.end(),
              [](const Addend& x, const Addend& y) { return key_less(x.key, y.key); });

    std::string out;
    for (const Addend& t : addends) {
        bool neg = t.q < 0;
        std::string mag = print_magnitude(pres, t.q, t.key.t_exp, *t.e);
        if (out.empty())
            out = (neg ? "-" : "") + mag;
        else
            out += (neg ? " - " : " + ") + mag;
    }
    return out;
}

}  // namespace skewps
