#include "skewps/presentation.hpp"

#include "skewps/element.hpp"
#include "skewps/errors.hpp"

namespace skewps {

std::uint64_t total_exponent(const ExponentVector& e) {
    std::uint64_t s = 0;
    for (auto x : e) s += x;
    return s;
}

bool is_zero_vector(const ExponentVector& e) {
    for (auto x : e)
        if (x != 0) return false;
    return true;
}

bool supported_below(const ExponentVector& e, std::size_t level) {
    for (std::size_t g = level; g < e.size(); ++g)
        if (e[g] != 0) return false;
    return true;
}

std::optional<std::size_t> Presentation::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const Rational& Presentation::tau_scalar(std::size_t l, std::size_t j) const {
    if (l >= size() || j >= l) throw InternalError("tau_scalar indices out of range");
    return tau_[l][j];
}

const TermMap& Presentation::delta_rule(std::size_t l, std::size_t j) const {
    if (l >= size() || j >= l) throw InternalError("delta_rule indices out of range");
    return delta_[l][j];
}

bool Presentation::level_has_delta(std::size_t l) const { return has_delta_[l]; }

bool Presentation::operator==(const Presentation& other) const {
    return base_ == other.base_ && names_ == other.names_ && tau_ == other.tau_ &&
           delta_ == other.delta_;
}

PresentationBuilder::PresentationBuilder(BaseRing base, std::vector<std::string> names) {
    if (names.empty()) throw InvalidParamsError("a presentation needs at least one generator");
    pres_ = std::shared_ptr<Presentation>(new Presentation());
    pres_->base_ = base;
    pres_->names_ = std::move(names);
    const std::size_t n = pres_->names_.size();
    for (std::size_t g = 0; g < n; ++g) {
        const std::string& nm = pres_->names_[g];
        if (nm.empty() || nm == "t")
            throw InvalidParamsError("invalid generator name '" + nm + "'");
        if (!pres_->index_.emplace(nm, g).second)
            throw InvalidParamsError("duplicate generator name '" + nm + "'");
    }
    pres_->tau_.resize(n);
    pres_->delta_.resize(n);
    pres_->has_delta_.assign(n, false);
    raw_delta_.resize(n);
    for (std::size_t l = 0; l < n; ++l) {
        pres_->tau_[l].assign(l, Rational(1));
        pres_->delta_[l].assign(l, TermMap{});
        raw_delta_[l].resize(l);
    }
}

PresentationBuilder& PresentationBuilder::set_tau(std::size_t l, std::size_t j,
                                                  const Rational& s) {
    if (built_) throw InternalError("builder already consumed");
    if (l >= pres_->size() || j >= l)
        throw InvalidParamsError("tau rule requires j < l within the generator range");
    if (s == 0) throw InvalidParamsError("tau scalar must be nonzero (tau is an automorphism)");
    pres_->tau_[l][j] = s;
    return *this;
}

PresentationBuilder& PresentationBuilder::set_delta(std::size_t l, std::size_t j,
                                                    std::vector<RawTerm> expr) {
    if (built_) throw InternalError("builder already consumed");
    if (l >= pres_->size() || j >= l)
        throw InvalidParamsError("delta rule requires j < l within the generator range");
    for (const RawTerm& t : expr) {
        if (t.t_power > 0 && pres_->base_.is_field())
            throw InvalidParamsError("delta rule uses t over a field base");
        for (std::size_t g : t.word)
            if (g >= l)
                throw InvalidParamsError("delta rule for level '" + pres_->names_[l] +
                                         "' uses generator '" + pres_->names_[g] +
                                         "' of level >= " + pres_->names_[l]);
    }
    raw_delta_[l][j] = std::move(expr);
    return *this;
}

PresentationPtr PresentationBuilder::build() {
    if (built_) throw InternalError("builder already consumed");
    built_ = true;
    // Normalize delta rules in adjunction order; level l only needs the
    // rules below l, which are installed by the time we reach it.
    const std::size_t n = pres_->size();
    for (std::size_t l = 1; l < n; ++l) {
        for (std::size_t j = 0; j < l; ++j) {
            if (raw_delta_[l][j].empty()) continue;
            TermMap nf = detail::normalize_raw(*pres_, raw_delta_[l][j]);
            if (!detail::supported_below(nf, l))
                throw InvalidParamsError("normalized delta rule escapes the lower ring");
            pres_->delta_[l][j] = std::move(nf);
        }
        for (std::size_t j = 0; j < l; ++j)
            if (!pres_->delta_[l][j].empty()) pres_->has_delta_[l] = true;
    }
    return pres_;
}

}  // namespace skewps
