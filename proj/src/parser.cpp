#include "skewps/parser.hpp"

#include <cctype>

#include "skewps/errors.hpp"

namespace skewps {

namespace {

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Type type = Type::End;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token tok;
        tok.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            tok.type = Token::Type::Number;
            tok.text = src.substr(start, i - start);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                      src[i] == '_'))
                ++i;
            tok.type = Token::Type::Ident;
            tok.text = src.substr(start, i - start);
        } else {
            switch (c) {
                case '+': tok.type = Token::Type::Plus; break;
                case '-': tok.type = Token::Type::Minus; break;
                case '*': tok.type = Token::Type::Star; break;
                case '^': tok.type = Token::Type::Caret; break;
                case '/': tok.type = Token::Type::Slash; break;
                case '(': tok.type = Token::Type::LParen; break;
                case ')': tok.type = Token::Type::RParen; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", i);
            }
            ++i;
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.type = Token::Type::End;
    end.pos = src.size();
    out.push_back(end);
    return out;
}

class Parser {
public:
    // pres == nullptr restricts the grammar to scalars (rationals and t).
    Parser(const std::string& src, const Presentation* pres, bool allow_t)
        : tokens_(tokenize(src)), pres_(pres), allow_t_(allow_t) {}

    ExprAst parse_full() {
        ExprAst e = parse_expr();
        const Token& t = peek();
        if (t.type != Token::Type::End)
            throw ParseError("unexpected trailing input", t.pos);
        return e;
    }

private:
    const Token& peek() const { return tokens_[i_]; }
    const Token& advance() { return tokens_[i_++]; }
    bool eat(Token::Type ty) {
        if (peek().type == ty) {
            ++i_;
            return true;
        }
        return false;
    }

    static bool starts_factor(const Token& t) {
        return t.type == Token::Type::Number || t.type == Token::Type::Ident ||
               t.type == Token::Type::LParen;
    }

    ExprAst parse_expr() {
        ExprAst sum;
        sum.kind = ExprAst::Kind::Sum;
        int sign = eat(Token::Type::Minus) ? -1 : 1;
        sum.children.push_back(parse_term());
        sum.signs.push_back(sign);
        while (true) {
            if (eat(Token::Type::Plus))
                sign = 1;
            else if (eat(Token::Type::Minus))
                sign = -1;
            else
                break;
            sum.children.push_back(parse_term());
            sum.signs.push_back(sign);
        }
        if (sum.children.size() == 1 && sum.signs[0] == 1) return std::move(sum.children[0]);
        return sum;
    }

    ExprAst parse_term() {
        ExprAst prod;
        prod.kind = ExprAst::Kind::Product;
        prod.children.push_back(parse_factor());
        while (true) {
            if (eat(Token::Type::Star)) {
                prod.children.push_back(parse_factor());
            } else if (starts_factor(peek())) {
                prod.children.push_back(parse_factor());  // juxtaposition
            } else {
                break;
            }
        }
        if (prod.children.size() == 1) return std::move(prod.children[0]);
        return prod;
    }

    ExprAst parse_factor() {
        ExprAst base = parse_primary();
        while (eat(Token::Type::Caret)) {
            const Token& t = peek();
            if (t.type != Token::Type::Number)
                throw ParseError("expected a natural number exponent after '^'", t.pos);
            advance();
            if (t.text.size() > 6)
                throw ParseError("exponent too large (max " + std::to_string(kMaxExponent) + ")",
                                 t.pos);
            unsigned long v = std::stoul(t.text);
            if (v > kMaxExponent)
                throw ParseError("exponent too large (max " + std::to_string(kMaxExponent) + ")",
                                 t.pos);
            ExprAst pow;
            pow.kind = ExprAst::Kind::Power;
            pow.exponent = static_cast<unsigned>(v);
            pow.children.push_back(std::move(base));
            base = std::move(pow);
        }
        return base;
    }

    ExprAst parse_primary() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::Number: {
                advance();
                std::string text = t.text;
                // "a/b" forms a rational literal; the denominator must be a
                // plain number.
                if (peek().type == Token::Type::Slash) {
                    const std::size_t slash_pos = peek().pos;
                    advance();
                    const Token& den = peek();
                    if (den.type != Token::Type::Number)
                        throw ParseError("expected a denominator after '/'", den.pos);
                    advance();
                    if (rational_from_string(den.text) == 0)
                        throw ParseError("zero denominator", slash_pos);
                    text += "/" + den.text;
                }
                ExprAst node;
                node.kind = ExprAst::Kind::Scalar;
                node.scalar = rational_from_string(text);
                return node;
            }
            case Token::Type::Ident: {
                advance();
                if (t.text == "t") {
                    if (!allow_t_)
                        throw ParseError(
                            "central variable t requires a central-series base", t.pos);
                    ExprAst node;
                    node.kind = ExprAst::Kind::CentralVar;
                    return node;
                }
                if (pres_ == nullptr) throw UnknownGeneratorError(t.text, t.pos);
                auto idx = pres_->index_of(t.text);
                if (!idx) throw UnknownGeneratorError(t.text, t.pos);
                ExprAst node;
                node.kind = ExprAst::Kind::Generator;
                node.generator = *idx;
                return node;
            }
            case Token::Type::LParen: {
                advance();
                ExprAst inner = parse_expr();
                if (!eat(Token::Type::RParen))
                    throw ParseError("expected ')'", peek().pos);
                return inner;
            }
            default:
                throw ParseError("expected a rational, generator, 't' or '('", t.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t i_ = 0;
    const Presentation* pres_;
    bool allow_t_;
};

}  // namespace

ExprAst parse(const std::string& src, const Presentation& pres) {
    Parser parser(src, &pres, !pres.base().is_field());
    return parser.parse_full();
}

Element eval(const ExprAst& ast, const PresentationPtr& pres) {
    switch (ast.kind) {
        case ExprAst::Kind::Scalar:
            return Element::constant(pres, ast.scalar);
        case ExprAst::Kind::CentralVar:
            return Element::constant(pres, BaseCoeff::t_power(pres->base(), 1));
        case ExprAst::Kind::Generator:
            return Element::generator(pres, ast.generator);
        case ExprAst::Kind::Power: {
            Element base = eval(ast.children[0], pres);
            Element acc = Element::one(pres);
            for (unsigned k = 0; k < ast.exponent; ++k) acc = nf_mul(acc, base);
            return acc;
        }
        case ExprAst::Kind::Product: {
            Element acc = eval(ast.children[0], pres);
            for (std::size_t i = 1; i < ast.children.size(); ++i)
                acc = nf_mul(acc, eval(ast.children[i], pres));
            return acc;
        }
        case ExprAst::Kind::Sum: {
            Element acc = Element::zero(pres);
            for (std::size_t i = 0; i < ast.children.size(); ++i) {
                Element part = eval(ast.children[i], pres);
                acc = ast.signs[i] > 0 ? acc + part : acc - part;
            }
            return acc;
        }
    }
    throw InternalError("unhandled expression node");
}

Element parse_element(const std::string& src, const PresentationPtr& pres) {
    return eval(parse(src, *pres), pres);
}

namespace {

BaseCoeff eval_scalar(const ExprAst& ast, BaseRing ring) {
    switch (ast.kind) {
        case ExprAst::Kind::Scalar:
            return BaseCoeff::of(ring, ast.scalar);
        case ExprAst::Kind::CentralVar:
            return BaseCoeff::t_power(ring, 1);
        case ExprAst::Kind::Power: {
            BaseCoeff base = eval_scalar(ast.children[0], ring);
            BaseCoeff acc = BaseCoeff::one(ring);
            for (unsigned k = 0; k < ast.exponent; ++k) acc = acc * base;
            return acc;
        }
        case ExprAst::Kind::Product: {
            BaseCoeff acc = eval_scalar(ast.children[0], ring);
            for (std::size_t i = 1; i < ast.children.size(); ++i)
                acc = acc * eval_scalar(ast.children[i], ring);
            return acc;
        }
        case ExprAst::Kind::Sum: {
            BaseCoeff acc(ring);
            for (std::size_t i = 0; i < ast.children.size(); ++i) {
                BaseCoeff part = eval_scalar(ast.children[i], ring);
                acc = ast.signs[i] > 0 ? acc + part : acc - part;
            }
            return acc;
        }
        case ExprAst::Kind::Generator: break;
    }
    throw InternalError("generator node in a scalar expression");
}

}  // namespace

BaseCoeff parse_base_coeff(const std::string& src, BaseRing ring) {
    Parser parser(src, nullptr, !ring.is_field());
    ExprAst ast = parser.parse_full();
    return eval_scalar(ast, ring);
}

}  // namespace skewps
