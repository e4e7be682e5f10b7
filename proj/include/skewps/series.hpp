#pragma once

#include <optional>
#include <vector>

#include "skewps/element.hpp"

namespace skewps {

// A coset of the skew power series completion modulo filtration degree > N:
// a normal-form polynomial body whose monomials all have degree <= N,
// together with the truncation order N. Equality is equality of bodies at
// the same order.
class TruncatedSeries {
public:
    // Keeps only the part of `body` with degree <= order (coefficients are
    // split by t-power where necessary).
    TruncatedSeries(Element body, unsigned order);

    const Element& body() const { return body_; }
    unsigned order() const { return order_; }
    const PresentationPtr& presentation() const { return body_.presentation(); }
    bool is_zero() const { return body_.is_zero(); }
    Degree min_degree() const { return body_.min_degree(); }

    static TruncatedSeries one(PresentationPtr p, unsigned order);
    static TruncatedSeries zero(PresentationPtr p, unsigned order);

    bool operator==(const TruncatedSeries& other) const {
        return order_ == other.order_ && body_ == other.body_;
    }

private:
    Element body_;
    unsigned order_;
};

// The part of `a` of filtration degree exactly d (splitting coefficients by
// t-power). Zero element when the stratum is empty.
Element degree_stratum(const Element& a, unsigned d);
// The part of degree <= N.
Element truncate_element(const Element& a, unsigned N);

TruncatedSeries truncate(const Element& a, unsigned N);
// Throws OrderRaiseError when N > a.order() (that information is gone).
TruncatedSeries truncate(const TruncatedSeries& a, unsigned N);

// Product in the completion modulo degree > N. Orders must match.
TruncatedSeries ts_mul(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries ts_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries ts_sub(const TruncatedSeries& f, const TruncatedSeries& g);

// Extensions of tau_l / delta_l to truncated series: apply the polynomial
// maps stratum by stratum (equivalently, to the whole finite body, since
// both maps are additive) and re-truncate at the same order.
TruncatedSeries hat_tau(std::size_t l, const TruncatedSeries& f);
TruncatedSeries hat_delta(std::size_t l, const TruncatedSeries& f);

// Inverse at the same order. Writes f = c (1 + w) with c the constant term
// (a unit of C, else NonUnitError) and min_degree(w) >= 1, then sums the
// finite alternating geometric series in w times c^{-1}.
TruncatedSeries ts_invert(const TruncatedSeries& f);

// Lowest nonzero homogeneous stratum with its degree.
struct Symbol {
    unsigned degree = 0;
    Element form;
};
Symbol symbol(const Element& a);          // throws ZeroElementError on zero
Symbol symbol(const TruncatedSeries& f);  // ditto

// Iterates apply_delta at level l; returns the first k <= K with a zero
// image, or nullopt when none of the first K iterates vanish.
std::optional<unsigned> poly_nilpotency_probe(std::size_t l, const Element& a, unsigned K);

// One step of the series probe: the k-th delta iterate, tracked at the
// raised order N + k (delta lifts order-N cosets to order-(N+1) cosets once
// the filtration hypotheses hold, so iterate k is faithful to degree N + k).
// `nonzero` certifies the iterate is a nonzero element of the completion.
struct SeriesProbeStep {
    unsigned k = 0;
    unsigned certified_order = 0;
    Degree min_degree = Degree::infinity();
    bool nonzero = false;
};

struct SeriesProbeReport {
    std::vector<SeriesProbeStep> steps;
    bool all_nonzero = true;
};

SeriesProbeReport series_nilpotency_probe(std::size_t l, const TruncatedSeries& f, unsigned K);

}  // namespace skewps
