#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewps/scalar.hpp"

namespace skewps {

// Exponent vector of a normal-form monomial y_1^{e_1} ... y_n^{e_n}.
using ExponentVector = std::vector<std::uint32_t>;

std::uint64_t total_exponent(const ExponentVector& e);
bool is_zero_vector(const ExponentVector& e);
// True when every generator with a nonzero exponent has index < level.
bool supported_below(const ExponentVector& e, std::size_t level);

// Sparse normal-form term map (no zero coefficients, no presentation handle).
// Element wraps this together with its presentation; the rewriting engine and
// the rule tables inside Presentation work on the raw maps.
using TermMap = std::map<ExponentVector, BaseCoeff>;

// One addend of an unnormalized rule expression: coeff * t^k * y_{w_0} ... y_{w_m}
// with the word in arbitrary order.
struct RawTerm {
    Rational coeff;
    unsigned t_power = 0;
    std::vector<std::size_t> word;
};

class PresentationBuilder;

// An iterated Ore extension C[y_1; tau_1, delta_1]...[y_n; tau_n, delta_n],
// presented by per-level generator rules:
//   tau_l(y_j) = tau_scalar(l, j) * y_j          (j < l, scalar nonzero)
//   delta_l(y_j) = delta_rule(l, j)              (normal form, support < l)
// tau and delta act as identity / zero on C. Immutable once built.
class Presentation {
public:
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t g) const { return names_[g]; }
    const BaseRing& base() const { return base_; }

    std::optional<std::size_t> index_of(std::string_view name) const;

    const Rational& tau_scalar(std::size_t l, std::size_t j) const;
    const TermMap& delta_rule(std::size_t l, std::size_t j) const;
    // True when every delta rule at this level is zero.
    bool level_has_delta(std::size_t l) const;

    bool operator==(const Presentation& other) const;

private:
    friend class PresentationBuilder;
    Presentation() : base_(BaseRing::field()) {}

    BaseRing base_;
    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::vector<std::vector<Rational>> tau_;   // tau_[l][j], j < l
    std::vector<std::vector<TermMap>> delta_;  // delta_[l][j], j < l
    std::vector<bool> has_delta_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

// Collects generator rules and builds the presentation level by level.
// Delta rules may be written out of normal order; they are normalized at
// build time with the rules of the lower levels, which is why the build
// proceeds in adjunction order.
class PresentationBuilder {
public:
    PresentationBuilder(BaseRing base, std::vector<std::string> names);

    // tau_l(y_j) = s * y_j; s must be nonzero. Defaults to 1 when unset.
    PresentationBuilder& set_tau(std::size_t l, std::size_t j, const Rational& s);
    // delta_l(y_j) given as a raw sum of scalar-times-word addends.
    PresentationBuilder& set_delta(std::size_t l, std::size_t j, std::vector<RawTerm> expr);

    PresentationPtr build();

private:
    std::shared_ptr<Presentation> pres_;
    std::vector<std::vector<std::vector<RawTerm>>> raw_delta_;
    bool built_ = false;
};

}  // namespace skewps
