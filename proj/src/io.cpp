#include "skewps/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "skewps/errors.hpp"
#include "skewps/parser.hpp"
#include "skewps/printer.hpp"

namespace skewps {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

constexpr std::size_t kMaxRuleTerms = 100000;

// Expands an expression tree over the free algebra (written generator order
// preserved) into a sum of scalar-times-word addends for the builder.
std::vector<RawTerm> expand_free(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::Scalar: {
            RawTerm t;
            t.coeff = ast.scalar;
            return {t};
        }
        case ExprAst::Kind::CentralVar: {
            RawTerm t;
            t.coeff = Rational(1);
            t.t_power = 1;
            return {t};
        }
        case ExprAst::Kind::Generator: {
            RawTerm t;
            t.coeff = Rational(1);
            t.word = {ast.generator};
            return {t};
        }
        case ExprAst::Kind::Sum: {
            std::vector<RawTerm> out;
            for (std::size_t i = 0; i < ast.children.size(); ++i) {
                for (RawTerm t : expand_free(ast.children[i])) {
                    if (ast.signs[i] < 0) t.coeff = -t.coeff;
                    out.push_back(std::move(t));
                }
                if (out.size() > kMaxRuleTerms)
                    throw ParseError("rule expression expands to too many terms", 0);
            }
            return out;
        }
        case ExprAst::Kind::Product: {
            std::vector<RawTerm> acc = expand_free(ast.children[0]);
            for (std::size_t i = 1; i < ast.children.size(); ++i) {
                std::vector<RawTerm> rhs = expand_free(ast.children[i]);
                std::vector<RawTerm> next;
                for (const RawTerm& a : acc) {
                    for (const RawTerm& b : rhs) {
                        RawTerm t;
                        t.coeff = a.coeff * b.coeff;
                        t.t_power = a.t_power + b.t_power;
                        t.word = a.word;
                        t.word.insert(t.word.end(), b.word.begin(), b.word.end());
                        next.push_back(std::move(t));
                    }
                    if (next.size() > kMaxRuleTerms)
                        throw ParseError("rule expression expands to too many terms", 0);
                }
                acc = std::move(next);
            }
            return acc;
        }
        case ExprAst::Kind::Power: {
            std::vector<RawTerm> acc{RawTerm{Rational(1), 0, {}}};
            std::vector<RawTerm> base = expand_free(ast.children[0]);
            for (unsigned k = 0; k < ast.exponent; ++k) {
                std::vector<RawTerm> next;
                for (const RawTerm& a : acc) {
                    for (const RawTerm& b : base) {
                        RawTerm t;
                        t.coeff = a.coeff * b.coeff;
                        t.t_power = a.t_power + b.t_power;
                        t.word = a.word;
                        t.word.insert(t.word.end(), b.word.begin(), b.word.end());
                        next.push_back(std::move(t));
                    }
                    if (next.size() > kMaxRuleTerms)
                        throw ParseError("rule expression expands to too many terms", 0);
                }
                acc = std::move(next);
            }
            return acc;
        }
    }
    throw InternalError("unhandled expression node in expand_free");
}

unsigned parse_unsigned(const std::string& s, const char* what) {
    if (s.empty()) throw ParseError(std::string("missing ") + what, 0);
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError(std::string("malformed ") + what + " '" + s + "'", 0);
    try {
        unsigned long v = std::stoul(s);
        if (v > 0xffffffffUL) throw std::out_of_range("too large");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("malformed ") + what + " '" + s + "'", 0);
    }
}

}  // namespace

std::string dump_presentation_config(const Presentation& pres) {
    std::ostringstream os;
    os << "# skewps presentation config\n";
    if (pres.base().is_field())
        os << "base field\n";
    else
        os << "base central-series " << pres.base().t_order() << "\n";
    os << "generators";
    for (const auto& n : pres.names()) os << " " << n;
    os << "\n";
    for (std::size_t l = 1; l < pres.size(); ++l)
        for (std::size_t j = 0; j < l; ++j)
            os << "tau " << pres.name(l) << " " << pres.name(j) << " = "
               << to_string(pres.tau_scalar(l, j)) << "\n";
    for (std::size_t l = 1; l < pres.size(); ++l) {
        for (std::size_t j = 0; j < l; ++j) {
            const TermMap& rule = pres.delta_rule(l, j);
            if (rule.empty()) continue;
            os << "delta " << pres.name(l) << " " << pres.name(j) << " = "
               << print_terms(pres, rule) << "\n";
        }
    }
    return os.str();
}

PresentationPtr load_presentation_config(const std::string& text) {
    std::optional<BaseRing> base;
    std::vector<std::string> names;
    struct PendingRule {
        std::string l, j, value;
        bool is_tau;
        std::size_t line_no;
    };
    std::vector<PendingRule> rules;

    std::istringstream is(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "base") {
            std::string kind;
            ls >> kind;
            if (kind == "field") {
                base = BaseRing::field();
            } else if (kind == "central-series") {
                long t = -1;
                ls >> t;
                if (t < 0)
                    throw ParseError("central-series needs a nonnegative order (line " +
                                         std::to_string(line_no) + ")",
                                     0);
                base = BaseRing::central_series(static_cast<unsigned>(t));
            } else {
                throw ParseError("unknown base kind '" + kind + "' (line " +
                                     std::to_string(line_no) + ")",
                                 0);
            }
        } else if (kw == "generators") {
            std::string n;
            while (ls >> n) names.push_back(n);
        } else if (kw == "tau" || kw == "delta") {
            std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError("missing '=' in rule (line " + std::to_string(line_no) + ")", 0);
            auto head = split_ws(line.substr(0, eq));
            if (head.size() != 3)
                throw ParseError("rule needs two generator names (line " +
                                     std::to_string(line_no) + ")",
                                 0);
            rules.push_back({head[1], head[2], strip(line.substr(eq + 1)), kw == "tau", line_no});
        } else {
            throw ParseError("unknown directive '" + kw + "' (line " + std::to_string(line_no) +
                                 ")",
                             0);
        }
    }
    if (!base) throw ParseError("config is missing the base directive", 0);
    if (names.empty()) throw ParseError("config is missing the generators directive", 0);

    // Resolve names and parse values with a throwaway presentation that has
    // the right generator set; the real builder then re-normalizes rules.
    PresentationBuilder shape_builder(*base, names);
    PresentationPtr shape = shape_builder.build();

    PresentationBuilder builder(*base, names);
    for (const PendingRule& r : rules) {
        auto li = shape->index_of(r.l);
        auto ji = shape->index_of(r.j);
        if (!li || !ji)
            throw ParseError("unknown generator in rule (line " + std::to_string(r.line_no) + ")",
                             0);
        if (r.is_tau) {
            builder.set_tau(*li, *ji, rational_from_string(r.value));
        } else {
            // Evaluating over the shape presentation (all rules trivial)
            // would silently commute generators, so expand the tree over the
            // free algebra instead and let the builder normalize the words.
            ExprAst ast = parse(r.value, *shape);
            builder.set_delta(*li, *ji, expand_free(ast));
        }
    }
    return builder.build();
}

std::string dump_series(const TruncatedSeries& s, const std::string& algebra_ref) {
    std::ostringstream os;
    os << "# skewps series\n";
    os << "algebra " << algebra_ref << "\n";
    os << "order " << s.order() << "\n";
    for (const auto& [e, c] : canonical_terms(s.body())) {
        os << print_base_coeff(c) << " ;";
        for (auto x : e) os << " " << x;
        os << "\n";
    }
    return os.str();
}

SeriesFileHeader peek_series_header(const std::string& text) {
    SeriesFileHeader header;
    bool have_algebra = false, have_order = false;
    std::istringstream is(text);
    std::string raw;
    while (std::getline(is, raw)) {
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("algebra ", 0) == 0) {
            header.algebra_ref = strip(line.substr(8));
            have_algebra = true;
        } else if (line.rfind("order ", 0) == 0) {
            header.order = parse_unsigned(strip(line.substr(6)), "series order");
            have_order = true;
        }
        if (have_algebra && have_order) break;
    }
    if (!have_algebra || !have_order)
        throw ParseError("series file is missing its algebra/order header", 0);
    return header;
}

TruncatedSeries load_series(const std::string& text, const PresentationPtr& pres) {
    SeriesFileHeader header = peek_series_header(text);
    TermMap terms;
    std::istringstream is(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("algebra ", 0) == 0 || line.rfind("order ", 0) == 0) continue;
        std::size_t semi = line.find(';');
        if (semi == std::string::npos)
            throw ParseError("series line is missing ';' (line " + std::to_string(line_no) + ")",
                             0);
        BaseCoeff c = parse_base_coeff(strip(line.substr(0, semi)), pres->base());
        auto parts = split_ws(line.substr(semi + 1));
        if (parts.size() != pres->size())
            throw ParseError("series line has " + std::to_string(parts.size()) +
                                 " exponents, expected " + std::to_string(pres->size()) +
                                 " (line " + std::to_string(line_no) + ")",
                             0);
        ExponentVector e;
        e.reserve(parts.size());
        for (const auto& p : parts) e.push_back(parse_unsigned(p, "series exponent"));
        detail::add_term(terms, e, c);
    }
    return TruncatedSeries(Element::from_terms(pres, std::move(terms)), header.order);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open file '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open file '" + path + "' for writing");
    f << content;
    if (!f) throw Error("failed writing file '" + path + "'");
}

}  // namespace skewps
