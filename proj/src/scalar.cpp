#include "skewps/scalar.hpp"

#include <cctype>

namespace skewps {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal", 0);
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("malformed rational literal '" + text + "'", i);
    bool seen_slash = false;
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] == '/') {
            if (seen_slash || k + 1 == text.size())
                throw ParseError("malformed rational literal '" + text + "'", k);
            seen_slash = true;
        } else if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw ParseError("malformed rational literal '" + text + "'", k);
        }
    }
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw ParseError("malformed rational literal '" + text + "'", 0);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", 0);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::string to_string(Degree d) {
    return d.is_infinite() ? std::string("inf") : std::to_string(d.value());
}

BaseCoeff BaseCoeff::of(BaseRing ring, const Rational& c) {
    BaseCoeff out(ring);
    out.set(0, c);
    return out;
}

BaseCoeff BaseCoeff::t_power(BaseRing ring, unsigned k, const Rational& c) {
    if (k > 0 && ring.is_field())
        throw KindMismatchError("central variable t is not available over a field base");
    BaseCoeff out(ring);
    out.set(k, c);
    return out;
}

bool BaseCoeff::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Degree BaseCoeff::val() const {
    if (terms_.empty()) return Degree::infinity();
    if (ring_.is_field()) return Degree(0);
    return Degree(terms_.begin()->first);
}

Rational BaseCoeff::coeff_at(unsigned k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BaseCoeff::set(unsigned k, const Rational& c) {
    if (c == 0) {
        terms_.erase(k);
        return;
    }
    if (!ring_.is_field() && k > ring_.t_order()) return;  // truncated past T
    terms_[k] = c;
}

void BaseCoeff::check_same_ring(const BaseCoeff& a, const BaseCoeff& b) {
    if (!(a.ring_ == b.ring_))
        throw KindMismatchError("BaseCoeff operands come from different base rings");
}

BaseCoeff BaseCoeff::operator-() const {
    BaseCoeff out(ring_);
    for (const auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

BaseCoeff operator+(const BaseCoeff& a, const BaseCoeff& b) {
    BaseCoeff::check_same_ring(a, b);
    BaseCoeff out = a;
    for (const auto& [k, c] : b.terms_) out.set(k, out.coeff_at(k) + c);
    return out;
}

BaseCoeff operator-(const BaseCoeff& a, const BaseCoeff& b) {
    BaseCoeff::check_same_ring(a, b);
    BaseCoeff out = a;
    for (const auto& [k, c] : b.terms_) out.set(k, out.coeff_at(k) - c);
    return out;
}

BaseCoeff operator*(const BaseCoeff& a, const BaseCoeff& b) {
    BaseCoeff::check_same_ring(a, b);
    BaseCoeff out(a.ring_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.set(ka + kb, out.coeff_at(ka + kb) + ca * cb);
    return out;
}

BaseCoeff operator*(const BaseCoeff& a, const Rational& s) {
    BaseCoeff out(a.ring());
    if (s == 0) return out;
    for (const auto& [k, c] : a.terms()) {
        Rational p = c * s;
        out.terms_[k] = p;
    }
    return out;
}

BaseCoeff operator*(const Rational& s, const BaseCoeff& a) { return a * s; }

BaseCoeff BaseCoeff::inverse() const {
    if (!is_unit())
        throw NonUnitError("base coefficient with valuation >= 1 has no inverse");
    Rational a0 = terms_.begin()->second;
    Rational a0_inv = Rational(1) / a0;
    if (ring_.is_field()) return of(ring_, a0_inv);
    // c = a0 (1 + u) with u in <t>; invert by the finite geometric series.
    BaseCoeff u(ring_);
    for (const auto& [k, c] : terms_)
        if (k > 0) u.set(k, c * a0_inv);
    BaseCoeff acc = one(ring_);
    BaseCoeff pow = one(ring_);
    for (unsigned j = 1; j <= ring_.t_order(); ++j) {
        pow = pow * (-u);
        if (pow.is_zero()) break;
        acc = acc + pow;
    }
    return acc * a0_inv;
}

}  // namespace skewps
