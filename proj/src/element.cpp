#include "skewps/element.hpp"

#include <algorithm>

#include "skewps/errors.hpp"

namespace skewps {

Degree monomial_degree(const BaseCoeff& c, const ExponentVector& e) {
    if (c.is_zero()) throw ZeroMonomialError("monomial_degree of a zero monomial");
    return c.val() + Degree(total_exponent(e));
}

namespace detail {

void add_term(TermMap& m, const ExponentVector& e, const BaseCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(e, c);
    if (!inserted) {
        BaseCoeff sum = it->second + c;
        if (sum.is_zero())
            m.erase(it);
        else
            it->second = std::move(sum);
    }
}

void add_into(TermMap& into, const TermMap& from) {
    for (const auto& [e, c] : from) add_term(into, e, c);
}

TermMap negate(const TermMap& m) {
    TermMap out;
    for (const auto& [e, c] : m) out.emplace(e, -c);
    return out;
}

TermMap scalar_mul(const TermMap& m, const BaseCoeff& c) {
    TermMap out;
    if (c.is_zero()) return out;
    for (const auto& [e, d] : m) add_term(out, e, d * c);
    return out;
}

TermMap scalar_mul(const TermMap& m, const Rational& s) {
    TermMap out;
    if (s == 0) return out;
    for (const auto& [e, d] : m) out.emplace(e, d * s);
    return out;
}

Degree min_degree(const TermMap& m) {
    Degree best = Degree::infinity();
    for (const auto& [e, c] : m) best = std::min(best, monomial_degree(c, e));
    return best;
}

bool supported_below(const TermMap& m, std::size_t level) {
    for (const auto& [e, c] : m)
        if (!skewps::supported_below(e, level)) return false;
    return true;
}

namespace {

// Product of the level-l tau scalars over a lower-level exponent vector,
// i.e. the eigenvalue of tau_l on Y^e.
Rational tau_eigenvalue(const Presentation& pres, std::size_t l, const ExponentVector& e) {
    Rational s(1);
    for (std::size_t j = 0; j < l && j < e.size(); ++j) {
        for (std::uint32_t k = 0; k < e[j]; ++k) s *= pres.tau_scalar(l, j);
    }
    return s;
}

}  // namespace

TermMap gen_times(const Presentation& pres, std::size_t g, const TermMap& b) {
    TermMap out;
    const std::size_t n = pres.size();
    for (const auto& [f, d] : b) {
        // Commute y_g past the part of f below level g; the part at or above
        // g already follows y_g in normal order.
        Rational s = tau_eigenvalue(pres, g, f);
        ExponentVector shifted = f;
        ++shifted[g];
        add_term(out, shifted, d * s);

        if (!pres.level_has_delta(g)) continue;
        ExponentVector f_lo(n, 0), f_hi(n, 0);
        bool has_lo = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (j < g) {
                f_lo[j] = f[j];
                has_lo = has_lo || f[j] != 0;
            } else {
                f_hi[j] = f[j];
            }
        }
        if (!has_lo) continue;
        TermMap dpart = delta_mono(pres, g, f_lo);
        for (const auto& [h, u] : dpart) {
            ExponentVector merged = h;
            for (std::size_t j = g; j < n; ++j) merged[j] += f_hi[j];
            add_term(out, merged, u * d);
        }
    }
    return out;
}

TermMap delta_mono(const Presentation& pres, std::size_t l, const ExponentVector& e) {
    TermMap out;
    if (is_zero_vector(e)) return out;  // delta(1) = 0
    std::size_t j = 0;
    while (e[j] == 0) ++j;
    ExponentVector rest = e;
    --rest[j];
    // delta(y_j * Y^rest) = tau(y_j) delta(Y^rest) + delta(y_j) * Y^rest
    TermMap dr = delta_mono(pres, l, rest);
    if (!dr.empty()) {
        TermMap left = gen_times(pres, j, dr);
        add_into(out, scalar_mul(left, pres.tau_scalar(l, j)));
    }
    const TermMap& rule = pres.delta_rule(l, j);
    if (!rule.empty()) {
        for (const auto& [h, u] : rule) {
            TermMap piece = mono_times(pres, h, {{rest, BaseCoeff::one(pres.base())}});
            add_into(out, scalar_mul(piece, u));
        }
    }
    return out;
}

TermMap mono_times(const Presentation& pres, const ExponentVector& e, TermMap b) {
    for (std::size_t g = pres.size(); g-- > 0;) {
        for (std::uint32_t k = 0; k < e[g]; ++k) {
            if (b.empty()) return b;
            b = gen_times(pres, g, b);
        }
    }
    return b;
}

TermMap nf_mul(const Presentation& pres, const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [e, c] : a) {
        TermMap part = mono_times(pres, e, b);
        add_into(out, scalar_mul(part, c));
    }
    return out;
}

TermMap apply_tau(const Presentation& pres, std::size_t l, const TermMap& a) {
    TermMap out;
    for (const auto& [e, c] : a) add_term(out, e, c * tau_eigenvalue(pres, l, e));
    return out;
}

TermMap apply_delta(const Presentation& pres, std::size_t l, const TermMap& a) {
    TermMap out;
    for (const auto& [e, c] : a) add_into(out, scalar_mul(delta_mono(pres, l, e), c));
    return out;
}

TermMap oracle_mul(const Presentation& pres, const TermMap& a, const TermMap& b) {
    struct WordTerm {
        BaseCoeff c;
        std::vector<std::uint32_t> w;
    };
    auto expand = [](const ExponentVector& e) {
        std::vector<std::uint32_t> w;
        for (std::size_t g = 0; g < e.size(); ++g)
            for (std::uint32_t k = 0; k < e[g]; ++k) w.push_back(static_cast<std::uint32_t>(g));
        return w;
    };

    std::vector<WordTerm> work;
    for (const auto& [e, c] : a) {
        for (const auto& [f, d] : b) {
            std::vector<std::uint32_t> w = expand(e);
            std::vector<std::uint32_t> wf = expand(f);
            w.insert(w.end(), wf.begin(), wf.end());
            work.push_back({c * d, std::move(w)});
        }
    }

    TermMap out;
    std::uint64_t steps = 0;
    constexpr std::uint64_t kStepCap = 20'000'000;
    while (!work.empty()) {
        if (++steps > kStepCap)
            throw InternalError("single-step rewriter exceeded its step cap");
        WordTerm t = std::move(work.back());
        work.pop_back();
        std::size_t k = 0;
        bool sorted = true;
        for (; k + 1 < t.w.size(); ++k) {
            if (t.w[k] > t.w[k + 1]) {
                sorted = false;
                break;
            }
        }
        if (sorted) {
            ExponentVector e(pres.size(), 0);
            for (auto g : t.w) ++e[g];
            add_term(out, e, t.c);
            continue;
        }
        const std::size_t l = t.w[k], j = t.w[k + 1];
        // swap: y_l y_j -> tau_l(y_j) y_l + delta_l(y_j)
        WordTerm swapped;
        swapped.c = t.c * pres.tau_scalar(l, j);
        swapped.w = t.w;
        std::swap(swapped.w[k], swapped.w[k + 1]);
        work.push_back(std::move(swapped));
        for (const auto& [h, u] : pres.delta_rule(l, j)) {
            WordTerm spliced;
            spliced.c = t.c * u;
            spliced.w.assign(t.w.begin(), t.w.begin() + static_cast<std::ptrdiff_t>(k));
            std::vector<std::uint32_t> mid = expand(h);
            spliced.w.insert(spliced.w.end(), mid.begin(), mid.end());
            spliced.w.insert(spliced.w.end(), t.w.begin() + static_cast<std::ptrdiff_t>(k) + 2,
                             t.w.end());
            work.push_back(std::move(spliced));
        }
    }
    return out;
}

TermMap normalize_raw(const Presentation& pres, const std::vector<RawTerm>& expr) {
    TermMap out;
    for (const RawTerm& t : expr) {
        if (t.coeff == 0) continue;
        TermMap word_nf{{ExponentVector(pres.size(), 0), BaseCoeff::one(pres.base())}};
        for (std::size_t i = t.word.size(); i-- > 0;)
            word_nf = gen_times(pres, t.word[i], word_nf);
        BaseCoeff c = BaseCoeff::t_power(pres.base(), t.t_power, t.coeff);
        add_into(out, scalar_mul(word_nf, c));
    }
    return out;
}

}  // namespace detail

Element Element::one(PresentationPtr p) {
    return constant(std::move(p), Rational(1));
}

Element Element::generator(PresentationPtr p, std::size_t g) {
    if (g >= p->size()) throw InvalidParamsError("generator index out of range");
    ExponentVector e(p->size(), 0);
    e[g] = 1;
    BaseCoeff c = BaseCoeff::one(p->base());
    return monomial(std::move(p), e, c);
}

Element Element::monomial(PresentationPtr p, const ExponentVector& e, const BaseCoeff& c) {
    if (e.size() != p->size())
        throw InvalidParamsError("exponent vector length does not match the generator count");
    if (!(c.ring() == p->base()))
        throw KindMismatchError("coefficient base ring does not match the presentation");
    Element out(std::move(p));
    detail::add_term(out.terms_, e, c);
    return out;
}

Element Element::constant(PresentationPtr p, const BaseCoeff& c) {
    ExponentVector e(p->size(), 0);
    return monomial(std::move(p), e, c);
}

Element Element::constant(PresentationPtr p, const Rational& c) {
    BaseCoeff b = BaseCoeff::of(p->base(), c);
    return constant(std::move(p), b);
}

Element Element::from_terms(PresentationPtr p, TermMap terms) {
    Element out(std::move(p));
    for (auto& [e, c] : terms) {
        if (e.size() != out.pres_->size())
            throw InvalidParamsError("exponent vector length does not match the generator count");
        if (c.is_zero()) continue;
        out.terms_.emplace(e, std::move(c));
    }
    return out;
}

Degree Element::min_degree() const { return detail::min_degree(terms_); }

bool Element::supported_below(std::size_t level) const {
    return detail::supported_below(terms_, level);
}

namespace {

void require_same_presentation(const Element& a, const Element& b) {
    if (a.presentation() != b.presentation())
        throw PresentationMismatchError("elements belong to different presentations");
}

}  // namespace

Element Element::operator-() const { return from_terms(pres_, detail::negate(terms_)); }

Element operator+(const Element& a, const Element& b) {
    require_same_presentation(a, b);
    TermMap t = a.terms();
    detail::add_into(t, b.terms());
    return Element::from_terms(a.presentation(), std::move(t));
}

Element operator-(const Element& a, const Element& b) {
    require_same_presentation(a, b);
    TermMap t = a.terms();
    detail::add_into(t, detail::negate(b.terms()));
    return Element::from_terms(a.presentation(), std::move(t));
}

Element operator*(const Element& a, const Element& b) { return nf_mul(a, b); }

Element operator*(const BaseCoeff& c, const Element& a) {
    return Element::from_terms(a.presentation(), detail::scalar_mul(a.terms(), c));
}

Element operator*(const Element& a, const BaseCoeff& c) { return c * a; }

Element operator*(const Rational& s, const Element& a) {
    return Element::from_terms(a.presentation(), detail::scalar_mul(a.terms(), s));
}

Element operator*(const Element& a, const Rational& s) { return s * a; }

bool Element::operator==(const Element& other) const {
    return pres_ == other.pres_ && terms_ == other.terms_;
}

namespace {

void require_supported_below(const Element& a, std::size_t l, const char* op) {
    if (l >= a.presentation()->size()) throw InvalidParamsError("level out of range");
    if (!a.supported_below(l))
        throw SupportError(std::string(op) + ": element involves generators at or above level " +
                           a.presentation()->name(l));
}

}  // namespace

Element apply_tau(std::size_t l, const Element& a) {
    require_supported_below(a, l, "apply_tau");
    return Element::from_terms(a.presentation(),
                               detail::apply_tau(*a.presentation(), l, a.terms()));
}

Element apply_delta(std::size_t l, const Element& a) {
    require_supported_below(a, l, "apply_delta");
    return Element::from_terms(a.presentation(),
                               detail::apply_delta(*a.presentation(), l, a.terms()));
}

Element nf_mul(const Element& a, const Element& b) {
    require_same_presentation(a, b);
    return Element::from_terms(a.presentation(),
                               detail::nf_mul(*a.presentation(), a.terms(), b.terms()));
}

Element single_step_oracle_mul(const Element& a, const Element& b) {
    require_same_presentation(a, b);
    return Element::from_terms(a.presentation(),
                               detail::oracle_mul(*a.presentation(), a.terms(), b.terms()));
}

}  // namespace skewps
