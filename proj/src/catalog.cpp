#include "skewps/catalog.hpp"

#include <cctype>
#include <sstream>

#include "skewps/errors.hpp"

namespace skewps {

namespace {

void check_mult_antisymmetric(const std::vector<std::vector<Rational>>& m, unsigned n,
                              const char* what) {
    if (m.size() != n) throw InvalidParamsError(std::string(what) + " must be an n x n matrix");
    for (unsigned i = 0; i < n; ++i) {
        if (m[i].size() != n)
            throw InvalidParamsError(std::string(what) + " must be an n x n matrix");
        for (unsigned j = 0; j < n; ++j)
            if (m[i][j] == 0)
                throw InvalidParamsError(std::string(what) + " entries must be nonzero");
    }
    for (unsigned i = 0; i < n; ++i) {
        if (m[i][i] != 1)
            throw InvalidParamsError(std::string(what) + " must have 1 on the diagonal");
        for (unsigned j = i + 1; j < n; ++j) {
            if (m[j][i] * m[i][j] != 1)
                throw InvalidParamsError(std::string(what) +
                                         " must be multiplicatively antisymmetric");
        }
    }
}

std::vector<std::vector<Rational>> matrix_from_upper(unsigned n,
                                                     const std::vector<Rational>& upper,
                                                     const char* what) {
    const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (upper.size() != expected)
        throw InvalidParamsError(std::string(what) + " upper triangle needs " +
                                 std::to_string(expected) + " entries, got " +
                                 std::to_string(upper.size()));
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(1)));
    std::size_t k = 0;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j, ++k) {
            if (upper[k] == 0)
                throw InvalidParamsError(std::string(what) + " entries must be nonzero");
            m[i][j] = upper[k];
            m[j][i] = Rational(1) / upper[k];
        }
    }
    return m;
}

}  // namespace

QuantumMatrixParams QuantumMatrixParams::from_upper(unsigned n, const Rational& lambda,
                                                    const std::vector<Rational>& upper) {
    QuantumMatrixParams params;
    params.n = n;
    params.lambda = lambda;
    params.p = matrix_from_upper(n, upper, "p");
    return params;
}

HortonParams HortonParams::from_upper(unsigned n, const std::vector<Rational>& P,
                                      const std::vector<Rational>& Q,
                                      const std::vector<Rational>& gamma_upper) {
    HortonParams params;
    params.n = n;
    params.P = P;
    params.Q = Q;
    params.Gamma = matrix_from_upper(n, gamma_upper, "gamma");
    return params;
}

PresentationPtr quantum_matrices(const QuantumMatrixParams& params) {
    const unsigned n = params.n;
    if (n == 0) throw InvalidParamsError("n must be positive");
    if (params.lambda == 0 || params.lambda == 1)
        throw InvalidParamsError("lambda must be nonzero and not equal to 1");
    check_mult_antisymmetric(params.p, n, "p");

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n) * n);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            names.push_back("y" + std::to_string(i) + std::to_string(j));

    PresentationBuilder builder(BaseRing::field(), names);
    auto gen = [n](unsigned i, unsigned j) { return (i - 1) * n + (j - 1); };  // 1-based (i,j)

    for (unsigned l = 1; l <= n; ++l) {
        for (unsigned m = 1; m <= n; ++m) {
            const std::size_t lm = gen(l, m);
            for (unsigned i = 1; i <= n; ++i) {
                for (unsigned j = 1; j <= n; ++j) {
                    const std::size_t ij = gen(i, j);
                    if (ij >= lm) continue;
                    const Rational p_li = params.p[l - 1][i - 1];
                    const Rational p_jm = params.p[j - 1][m - 1];
                    if (l >= i && m > j) {
                        builder.set_tau(lm, ij, p_li * p_jm);
                    } else if (l > i && m <= j) {
                        builder.set_tau(lm, ij, params.lambda * p_li * p_jm);
                    } else {
                        throw InternalError("quantum matrix tau case analysis is not total");
                    }
                    if (l > i && m > j) {
                        RawTerm term;
                        term.coeff = (params.lambda - 1) * p_li;
                        term.word = {gen(i, m), gen(l, j)};
                        builder.set_delta(lm, ij, {term});
                    }
                }
            }
        }
    }
    return builder.build();
}

PresentationPtr horton_kn(const HortonParams& params) {
    const unsigned n = params.n;
    if (n == 0) throw InvalidParamsError("n must be positive");
    if (params.P.size() != n || params.Q.size() != n)
        throw InvalidParamsError("P and Q must have n entries");
    for (unsigned i = 0; i < n; ++i) {
        if (params.P[i] == 0 || params.Q[i] == 0)
            throw InvalidParamsError("P and Q entries must be nonzero");
        if (params.P[i] == params.Q[i])
            throw InvalidParamsError("p_i != q_i is required for each i");
    }
    check_mult_antisymmetric(params.Gamma, n, "gamma");

    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
        names.push_back("y" + std::to_string(i));
    }
    auto x_gen = [](unsigned i) { return static_cast<std::size_t>(2) * (i - 1); };
    auto y_gen = [](unsigned i) { return static_cast<std::size_t>(2) * (i - 1) + 1; };

    PresentationBuilder builder(BaseRing::field(), names);
    const auto& P = params.P;
    const auto& Q = params.Q;
    const auto& G = params.Gamma;
    for (unsigned i = 1; i <= n; ++i) {
        // sigma_i on the x_i level (no derivation).
        for (unsigned j = 1; j < i; ++j) {
            builder.set_tau(x_gen(i), x_gen(j), Rational(1) / Q[j - 1] * P[i - 1] * G[i - 1][j - 1]);
            builder.set_tau(x_gen(i), y_gen(j), Q[j - 1] * G[j - 1][i - 1]);
        }
        // tau_i and delta_i on the y_i level.
        for (unsigned j = 1; j < i; ++j) {
            builder.set_tau(y_gen(i), x_gen(j), Rational(1) / P[i - 1] * G[j - 1][i - 1]);
            builder.set_tau(y_gen(i), y_gen(j), G[i - 1][j - 1]);
        }
        builder.set_tau(y_gen(i), x_gen(i), Rational(1) / Q[i - 1]);
        if (i > 1) {
            std::vector<RawTerm> expr;
            for (unsigned l = 1; l < i; ++l) {
                RawTerm term;
                term.coeff = -(Rational(1) / Q[i - 1]) * (Q[l - 1] - P[l - 1]);
                term.word = {y_gen(l), x_gen(l)};  // out of normal order on purpose
                expr.push_back(term);
            }
            builder.set_delta(y_gen(i), x_gen(i), std::move(expr));
        }
    }
    return builder.build();
}

QuantumMatrixParams default_qmat_params(unsigned n) {
    switch (n) {
        case 1: return QuantumMatrixParams::from_upper(1, Rational(2), {});
        case 2: return QuantumMatrixParams::from_upper(2, Rational(2), {Rational(3)});
        case 3:
            return QuantumMatrixParams::from_upper(3, Rational(2),
                                                   {Rational(3), Rational(5), Rational(7)});
        default: throw InvalidParamsError("no default quantum matrix parameters for n = " +
                                          std::to_string(n));
    }
}

HortonParams default_kn_params(unsigned n) {
    switch (n) {
        case 1: return HortonParams::from_upper(1, {Rational(2)}, {Rational(3)}, {});
        case 2:
            return HortonParams::from_upper(2, {Rational(2), Rational(5)},
                                            {Rational(3), Rational(7)}, {Rational(1)});
        case 3:
            return HortonParams::from_upper(
                3, {Rational(2), Rational(5), Rational(11)},
                {Rational(3), Rational(7), Rational(13)},
                {Rational(1), Rational(2), Rational(1, 2)});
        default:
            throw InvalidParamsError("no default K_n parameters for n = " + std::to_string(n));
    }
}

namespace {

// Tiny parser for "name(key=value, key=[v1,v2], ...)" algebra specs.
struct SpecParser {
    const std::string& s;
    std::size_t i = 0;

    explicit SpecParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' in algebra spec", i);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '-'))
            ++i;
        if (start == i) throw ParseError("expected identifier in algebra spec", i);
        return s.substr(start, i - start);
    }
    Rational rational() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            ++i;
        if (start == i) throw ParseError("expected a rational in algebra spec", i);
        return rational_from_string(s.substr(start, i - start));
    }
    std::vector<Rational> rational_list() {
        std::vector<Rational> out;
        expect('[');
        skip_ws();
        if (eat(']')) return out;
        out.push_back(rational());
        while (eat(',')) out.push_back(rational());
        expect(']');
        return out;
    }
    bool at_end() {
        skip_ws();
        return i == s.size();
    }
};

}  // namespace

PresentationPtr make_algebra(const std::string& spec) {
    SpecParser sp(spec);
    std::string head = sp.ident();
    if (sp.at_end()) {
        if (head.rfind("qmat", 0) == 0 && head.size() == 5 &&
            std::isdigit(static_cast<unsigned char>(head[4])))
            return quantum_matrices(default_qmat_params(static_cast<unsigned>(head[4] - '0')));
        if (head.size() == 2 && head[0] == 'k' &&
            std::isdigit(static_cast<unsigned char>(head[1])))
            return horton_kn(default_kn_params(static_cast<unsigned>(head[1] - '0')));
        throw InvalidParamsError("unknown algebra name '" + head + "'");
    }

    sp.expect('(');
    unsigned n = 0;
    bool have_n = false;
    Rational lambda;
    bool have_lambda = false;
    std::vector<Rational> p_upper, P, Q, gamma_upper;
    bool have_p = false, have_P = false, have_Q = false, have_gamma = false;
    while (true) {
        std::string key = sp.ident();
        sp.expect('=');
        if (key == "n") {
            Rational v = sp.rational();
            if (!is_integer(v) || v <= 0)
                throw InvalidParamsError("n must be a positive integer");
            n = static_cast<unsigned>(v.get_num().get_ui());
            have_n = true;
        } else if (key == "lambda") {
            lambda = sp.rational();
            have_lambda = true;
        } else if (key == "p") {
            p_upper = sp.rational_list();
            have_p = true;
        } else if (key == "P") {
            P = sp.rational_list();
            have_P = true;
        } else if (key == "Q") {
            Q = sp.rational_list();
            have_Q = true;
        } else if (key == "gamma" || key == "Gamma") {
            gamma_upper = sp.rational_list();
            have_gamma = true;
        } else {
            throw InvalidParamsError("unknown algebra parameter '" + key + "'");
        }
        if (!sp.eat(',')) break;
    }
    sp.expect(')');
    if (!sp.at_end()) throw ParseError("trailing input after algebra spec", sp.i);
    if (!have_n) throw InvalidParamsError("algebra spec needs n=");

    if (head == "qmat") {
        if (!have_lambda) throw InvalidParamsError("qmat needs lambda=");
        if (!have_p && n > 1) throw InvalidParamsError("qmat needs p=[...]");
        return quantum_matrices(QuantumMatrixParams::from_upper(n, lambda, p_upper));
    }
    if (head == "kn") {
        if (!have_P || !have_Q) throw InvalidParamsError("kn needs P=[...] and Q=[...]");
        if (!have_gamma && n > 1) throw InvalidParamsError("kn needs gamma=[...]");
        return horton_kn(HortonParams::from_upper(n, P, Q, gamma_upper));
    }
    throw InvalidParamsError("unknown algebra family '" + head + "'");
}

std::string preset_template(const std::string& name, unsigned n) {
    if (name != "quantum-symplectic" && name != "quantum-euclidean")
        throw InvalidParamsError("unknown preset '" + name + "'");
    std::ostringstream os;
    os << "# " << name << " 2n-space preset, n = " << n << "\n";
    os << "# This coordinate ring is a specialization of the K_n family. Fill in\n";
    os << "# P, Q and gamma below (nonzero rationals, p_i != q_i, gamma the strict\n";
    os << "# upper triangle of a multiplicatively antisymmetric matrix), then build\n";
    os << "# the algebra with:  kn(n=" << n << ", P=[...], Q=[...], gamma=[...])\n";
    os << "# P = [";
    for (unsigned i = 0; i < n; ++i) os << (i ? ", " : "") << "<p" << (i + 1) << ">";
    os << "]\n# Q = [";
    for (unsigned i = 0; i < n; ++i) os << (i ? ", " : "") << "<q" << (i + 1) << ">";
    os << "]\n# gamma = [";
    bool first = true;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) {
            os << (first ? "" : ", ") << "<gamma" << i << j << ">";
            first = false;
        }
    os << "]\n";
    return os.str();
}

}  // namespace skewps
