#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

#include "skewps/errors.hpp"

namespace skewps {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we rely on.
using Rational = mpq_class;

// Parses "a" or "a/b". Throws ParseError on malformed input or b = 0.
Rational rational_from_string(const std::string& text);

// Canonical "a" / "a/b" rendering.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

// A natural number extended with infinity. Used for m-adic valuations and
// filtration degrees; infinity absorbs under +.
class Degree {
public:
    constexpr Degree() : v_(0) {}
    constexpr Degree(std::uint64_t v) : v_(v) {}

    static constexpr Degree infinity() { return Degree(kInf, Tag{}); }

    constexpr bool is_infinite() const { return v_ == kInf; }

    std::uint64_t value() const {
        if (is_infinite()) throw InternalError("value() on infinite Degree");
        return v_;
    }

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Degree(a.v_ + b.v_);
    }

    friend constexpr bool operator==(Degree a, Degree b) { return a.v_ == b.v_; }
    friend constexpr bool operator<(Degree a, Degree b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(Degree a, Degree b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(Degree a, Degree b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(Degree a, Degree b) { return a.v_ >= b.v_; }
    friend constexpr bool operator!=(Degree a, Degree b) { return a.v_ != b.v_; }

private:
    struct Tag {};
    constexpr Degree(std::uint64_t v, Tag) : v_(v) {}
    static constexpr std::uint64_t kInf = ~std::uint64_t{0};
    std::uint64_t v_;
};

std::string to_string(Degree d);  // "inf" for infinity

// The base ring C: either the field of rationals (maximal ideal 0) or the
// rationals with one central variable t truncated past t-degree T (maximal
// ideal <t>).
class BaseRing {
public:
    enum class Kind { Field, CentralSeries };

    static BaseRing field() { return BaseRing(Kind::Field, 0); }
    static BaseRing central_series(unsigned t_order) {
        return BaseRing(Kind::CentralSeries, t_order);
    }

    Kind kind() const { return kind_; }
    bool is_field() const { return kind_ == Kind::Field; }
    unsigned t_order() const { return t_order_; }

    bool operator==(const BaseRing&) const = default;

private:
    BaseRing(Kind k, unsigned t) : kind_(k), t_order_(t) {}
    Kind kind_;
    unsigned t_order_;
};

// An element of C: a sparse map t-exponent -> nonzero rational. Over a field
// base only exponent 0 may appear; over CentralSeries(T) exponents stay <= T
// and products are truncated past T.
class BaseCoeff {
public:
    explicit BaseCoeff(BaseRing ring) : ring_(ring) {}  // zero

    static BaseCoeff of(BaseRing ring, const Rational& c);
    // c * t^k; requires a CentralSeries base when k > 0.
    static BaseCoeff t_power(BaseRing ring, unsigned k, const Rational& c = Rational(1));
    static BaseCoeff one(BaseRing ring) { return of(ring, Rational(1)); }

    const BaseRing& ring() const { return ring_; }
    const std::map<unsigned, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // Largest k with this element in m^k; infinity iff zero. Over a field
    // base every nonzero value has valuation 0.
    Degree val() const;
    bool is_unit() const { return val() == Degree(0); }

    // Coefficient of t^k (zero rational if absent).
    Rational coeff_at(unsigned k) const;

    BaseCoeff operator-() const;
    friend BaseCoeff operator+(const BaseCoeff& a, const BaseCoeff& b);
    friend BaseCoeff operator-(const BaseCoeff& a, const BaseCoeff& b);
    friend BaseCoeff operator*(const BaseCoeff& a, const BaseCoeff& b);
    friend BaseCoeff operator*(const BaseCoeff& a, const Rational& s);
    friend BaseCoeff operator*(const Rational& s, const BaseCoeff& a);

    // Multiplicative inverse, exact over the field base and modulo t^{T+1}
    // over CentralSeries(T). Throws NonUnitError when val() >= 1.
    BaseCoeff inverse() const;

    bool operator==(const BaseCoeff& other) const {
        return ring_ == other.ring_ && terms_ == other.terms_;
    }

private:
    void set(unsigned k, const Rational& c);  // inserts, drops zeros, truncates
    static void check_same_ring(const BaseCoeff& a, const BaseCoeff& b);

    std::map<unsigned, Rational> terms_;
    BaseRing ring_;
};

inline Degree val(const BaseCoeff& c) { return c.val(); }
inline BaseCoeff base_add(const BaseCoeff& a, const BaseCoeff& b) { return a + b; }
inline BaseCoeff base_mul(const BaseCoeff& a, const BaseCoeff& b) { return a * b; }
inline BaseCoeff base_neg(const BaseCoeff& a) { return -a; }
inline BaseCoeff base_inv(const BaseCoeff& a) { return a.inverse(); }

}  // namespace skewps
