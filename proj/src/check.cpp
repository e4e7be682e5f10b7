#include "skewps/check.hpp"

#include "skewps/printer.hpp"

namespace skewps {

const char* to_string(ClauseStatus s) {
    switch (s) {
        case ClauseStatus::Pass: return "pass";
        case ClauseStatus::Fail: return "fail";
        case ClauseStatus::Skipped: return "skipped";
    }
    return "?";
}

namespace {

void add_clause(CheckReport& report, std::string key, std::string human, bool ok,
                std::string witness = {}) {
    CheckClause c;
    c.key = std::move(key);
    c.human = std::move(human);
    c.status = ok ? ClauseStatus::Pass : ClauseStatus::Fail;
    if (!ok) c.witness = std::move(witness);
    report.passed = report.passed && ok;
    report.clauses.push_back(std::move(c));
}

Element rule_element(const PresentationPtr& p, std::size_t l, std::size_t j) {
    return Element::from_terms(p, p->delta_rule(l, j));
}

}  // namespace

CheckReport check_well_defined(const PresentationPtr& p) {
    CheckReport report;
    report.check_name = "well_defined";
    const std::size_t n = p->size();
    for (std::size_t l = 1; l < n; ++l) {
        const std::string& ln = p->name(l);
        for (std::size_t jp = 1; jp < l; ++jp) {
            for (std::size_t j = 0; j < jp; ++j) {
                const std::string pair = p->name(jp) + "." + p->name(j);
                Element yj = Element::generator(p, j);
                Element yjp = Element::generator(p, jp);
                Element rel = nf_mul(yjp, yj);  // nf(y_j' y_j)

                // tau_l on the unnormalized product vs. on its normal form.
                Element tau_lhs =
                    (p->tau_scalar(l, jp) * p->tau_scalar(l, j)) * rel;
                Element tau_rhs = apply_tau(l, rel);
                add_clause(report, ln + ".tau." + pair,
                           ln + ": tau respects " + p->name(jp) + "*" + p->name(j),
                           tau_lhs == tau_rhs,
                           "lhs = " + print_element(tau_lhs) +
                               ", rhs = " + print_element(tau_rhs));

                // delta_l via Leibniz on the pair vs. on the normal form.
                Element delta_lhs =
                    p->tau_scalar(l, jp) * nf_mul(yjp, rule_element(p, l, j)) +
                    nf_mul(rule_element(p, l, jp), yj);
                Element delta_rhs = apply_delta(l, rel);
                add_clause(report, ln + ".delta." + pair,
                           ln + ": delta respects " + p->name(jp) + "*" + p->name(j),
                           delta_lhs == delta_rhs,
                           "lhs = " + print_element(delta_lhs) +
                               ", rhs = " + print_element(delta_rhs));
            }
        }
    }
    return report;
}

CheckReport check_setup(const PresentationPtr& p) {
    CheckReport report;
    report.check_name = "setup";
    const std::size_t n = p->size();
    bool lower_ok = true;
    for (std::size_t l = 1; l < n; ++l) {
        const std::string& ln = p->name(l);
        if (!lower_ok) {
            CheckClause c;
            c.key = ln + ".skipped";
            c.human = ln + ": skipped (a lower level failed, degree criterion unavailable)";
            c.status = ClauseStatus::Skipped;
            report.passed = false;
            report.clauses.push_back(std::move(c));
            continue;
        }
        bool level_ok = true;

        // (a) tau scalars are units; tau_l(y_j) = s * y_j stays in I.
        bool units = true;
        std::string unit_witness;
        for (std::size_t j = 0; j < l; ++j) {
            if (p->tau_scalar(l, j) == 0) {
                units = false;
                unit_witness = "tau(" + p->name(j) + ") has scalar 0";
            }
        }
        add_clause(report, ln + ".tau_units", ln + ": tau scalars are units", units,
                   unit_witness);
        add_clause(report, ln + ".tau_in_I",
                   ln + ": tau maps generators into I (scalar multiples)", true);
        level_ok = level_ok && units;

        // (b) delta(R) in I: each rule has degree >= 1; delta kills C.
        for (std::size_t j = 0; j < l; ++j) {
            Degree d = detail::min_degree(p->delta_rule(l, j));
            bool ok = d >= Degree(1);
            add_clause(report, ln + ".delta_R_in_I." + p->name(j),
                       ln + ": delta(" + p->name(j) + ") lies in I", ok,
                       "delta(" + p->name(j) + ") = " +
                           print_element(rule_element(p, l, j)) + " has degree " +
                           to_string(d));
            level_ok = level_ok && ok;
        }
        add_clause(report, ln + ".delta_kills_C",
                   ln + ": delta vanishes on C (by the presentation format)", true);

        // (c) delta(I) in I^2: each rule has degree >= 2; over a CentralSeries
        // base, delta of a degree-1 base monomial (t itself) vanishes.
        for (std::size_t j = 0; j < l; ++j) {
            Degree d = detail::min_degree(p->delta_rule(l, j));
            bool ok = d >= Degree(2);
            add_clause(report, ln + ".delta_I_in_I2." + p->name(j),
                       ln + ": delta(" + p->name(j) + ") lies in I^2", ok,
                       "delta(" + p->name(j) + ") = " +
                           print_element(rule_element(p, l, j)) + " has degree " +
                           to_string(d));
            level_ok = level_ok && ok;
        }
        if (p->base().is_field()) {
            add_clause(report, ln + ".delta_m_part",
                       ln + ": m-part vacuous over a field base", true);
        } else {
            Element t1 = Element::constant(p, BaseCoeff::t_power(p->base(), 1));
            Element image = apply_delta(l, t1);
            bool ok = image.is_zero();
            add_clause(report, ln + ".delta_m_part",
                       ln + ": delta kills the degree-1 base monomial t", ok,
                       "delta(t) = " + print_element(image));
            level_ok = level_ok && ok;
        }

        lower_ok = lower_ok && level_ok;
    }
    return report;
}

}  // namespace skewps
