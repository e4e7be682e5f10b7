#include "skewps/series.hpp"

#include "skewps/errors.hpp"

namespace skewps {

namespace {

// Keep only coefficient strata with t_exp + |e| inside [lo, hi].
Element band(const Element& a, Degree lo, Degree hi) {
    TermMap out;
    for (const auto& [e, c] : a.terms()) {
        const std::uint64_t base = total_exponent(e);
        BaseCoeff kept(c.ring());
        for (const auto& [k, q] : c.terms()) {
            Degree s = Degree(base + k);
            if (lo <= s && s <= hi) kept = kept + BaseCoeff::t_power(c.ring(), k, q);
        }
        if (!kept.is_zero()) out.emplace(e, std::move(kept));
    }
    return Element::from_terms(a.presentation(), std::move(out));
}

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.presentation() != g.presentation())
        throw PresentationMismatchError("series belong to different presentations");
    if (f.order() != g.order())
        throw OrderRaiseError("series have different truncation orders (" +
                              std::to_string(f.order()) + " vs " + std::to_string(g.order()) +
                              ")");
}

}  // namespace

Element degree_stratum(const Element& a, unsigned d) { return band(a, Degree(d), Degree(d)); }

Element truncate_element(const Element& a, unsigned N) { return band(a, Degree(0), Degree(N)); }

TruncatedSeries::TruncatedSeries(Element body, unsigned order)
    : body_(truncate_element(body, order)), order_(order) {}

TruncatedSeries TruncatedSeries::one(PresentationPtr p, unsigned order) {
    return TruncatedSeries(Element::one(std::move(p)), order);
}

TruncatedSeries TruncatedSeries::zero(PresentationPtr p, unsigned order) {
    return TruncatedSeries(Element::zero(std::move(p)), order);
}

TruncatedSeries truncate(const Element& a, unsigned N) { return TruncatedSeries(a, N); }

TruncatedSeries truncate(const TruncatedSeries& a, unsigned N) {
    if (N > a.order())
        throw OrderRaiseError("cannot raise truncation order from " +
                              std::to_string(a.order()) + " to " + std::to_string(N));
    return TruncatedSeries(a.body(), N);
}

TruncatedSeries ts_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g);
    return TruncatedSeries(nf_mul(f.body(), g.body()), f.order());
}

TruncatedSeries ts_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g);
    return TruncatedSeries(f.body() + g.body(), f.order());
}

TruncatedSeries ts_sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g);
    return TruncatedSeries(f.body() - g.body(), f.order());
}

TruncatedSeries hat_tau(std::size_t l, const TruncatedSeries& f) {
    return TruncatedSeries(apply_tau(l, f.body()), f.order());
}

TruncatedSeries hat_delta(std::size_t l, const TruncatedSeries& f) {
    return TruncatedSeries(apply_delta(l, f.body()), f.order());
}

TruncatedSeries ts_invert(const TruncatedSeries& f) {
    const PresentationPtr& p = f.presentation();
    const unsigned N = f.order();
    ExponentVector zero_e(p->size(), 0);
    BaseCoeff c(p->base());
    if (auto it = f.body().terms().find(zero_e); it != f.body().terms().end()) c = it->second;
    if (!c.is_unit())
        throw NonUnitError("series is not a unit: its constant term is not a unit of C");
    BaseCoeff c_inv = c.inverse();

    // f = c (1 + w) with min_degree(w) >= 1.
    Element w = c_inv * (f.body() - Element::constant(p, c));
    TruncatedSeries w_ts(w, N);
    TruncatedSeries acc = TruncatedSeries::one(p, N);
    TruncatedSeries pow = TruncatedSeries::one(p, N);
    for (unsigned k = 1; k <= N; ++k) {
        pow = ts_mul(pow, w_ts);
        if (pow.is_zero()) break;
        if (k % 2 == 1)
            acc = ts_sub(acc, pow);
        else
            acc = ts_add(acc, pow);
    }
    return TruncatedSeries(acc.body() * c_inv, N);
}

Symbol symbol(const Element& a) {
    Degree d = a.min_degree();
    if (d.is_infinite()) throw ZeroElementError("symbol of the zero element");
    Symbol s;
    s.degree = static_cast<unsigned>(d.value());
    s.form = degree_stratum(a, s.degree);
    return s;
}

Symbol symbol(const TruncatedSeries& f) { return symbol(f.body()); }

std::optional<unsigned> poly_nilpotency_probe(std::size_t l, const Element& a, unsigned K) {
    Element cur = a;
    for (unsigned k = 1; k <= K; ++k) {
        cur = apply_delta(l, cur);
        if (cur.is_zero()) return k;
    }
    return std::nullopt;
}

SeriesProbeReport series_nilpotency_probe(std::size_t l, const TruncatedSeries& f, unsigned K) {
    SeriesProbeReport report;
    // delta raises the filtration degree, so an order-N coset determines the
    // k-th iterate up to degree N + k; truncating there keeps every reported
    // stratum faithful to the true series iterate.
    TruncatedSeries cur = f;
    for (unsigned k = 1; k <= K; ++k) {
        const unsigned raised = cur.order() + 1;
        cur = TruncatedSeries(apply_delta(l, cur.body()), raised);
        SeriesProbeStep step;
        step.k = k;
        step.certified_order = raised;
        step.min_degree = cur.min_degree();
        step.nonzero = !cur.is_zero();
        report.all_nonzero = report.all_nonzero && step.nonzero;
        report.steps.push_back(step);
    }
    return report;
}

}  // namespace skewps
