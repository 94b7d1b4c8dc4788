#include "npv/parser.hpp"

#include <cctype>
#include <utility>

#include "npv/errors.hpp"

namespace npv {

namespace {

struct Token {
    enum class Type { Number, Gen, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    Integer value;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        // Accept the UTF-8 minus sign as a synonym for '-'.
        if (c == '\xe2' && i + 2 < text.size() && text[i + 1] == '\x88' &&
            text[i + 2] == '\x92') {
            out.push_back({Token::Type::Minus, 0, i});
            i += 3;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Type::Number, Integer(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        Token::Type t;
        switch (c) {
            case 's': t = Token::Type::Gen; break;
            case 't': t = Token::Type::Var; break;
            case '+': t = Token::Type::Plus; break;
            case '-': t = Token::Type::Minus; break;
            case '*': t = Token::Type::Star; break;
            case '/': t = Token::Type::Slash; break;
            case '^': t = Token::Type::Caret; break;
            case '(': t = Token::Type::LParen; break;
            case ')': t = Token::Type::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({t, 0, i});
        ++i;
    }
    out.push_back({Token::Type::End, 0, text.size()});
    return out;
}

ExprPtr make_node(Expr e) { return std::make_shared<Expr>(std::move(e)); }

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        expect(Token::Type::End, "trailing input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }
    bool accept(Token::Type t) {
        if (peek().type != t) return false;
        ++pos_;
        return true;
    }
    void expect(Token::Type t, const char* what) {
        if (!accept(t)) throw ParseError(std::string("expected ") + what, peek().pos);
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (accept(Token::Type::Plus))
                e = make_node({Expr::Kind::Add, 0, e, term()});
            else if (accept(Token::Type::Minus))
                e = make_node({Expr::Kind::Sub, 0, e, term()});
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (accept(Token::Type::Star))
                e = make_node({Expr::Kind::Mul, 0, e, unary()});
            else if (accept(Token::Type::Slash))
                e = make_node({Expr::Kind::Div, 0, e, unary()});
            else
                return e;
        }
    }

    ExprPtr unary() {
        if (accept(Token::Type::Minus))
            return make_node({Expr::Kind::Neg, 0, unary(), nullptr});
        return power();
    }

    ExprPtr power() {
        ExprPtr e = atom();
        while (accept(Token::Type::Caret)) {
            bool neg = accept(Token::Type::Minus);
            const Token t = take();
            if (t.type != Token::Type::Number)
                throw ParseError("exponent must be an integer literal", t.pos);
            long exp = t.value.get_si();
            if (neg) exp = -exp;
            Expr node{Expr::Kind::Pow, 0, e, nullptr};
            node.exponent = exp;
            e = make_node(std::move(node));
        }
        return e;
    }

    ExprPtr atom() {
        const Token t = take();
        switch (t.type) {
            case Token::Type::Number:
                return make_node({Expr::Kind::Number, t.value, nullptr, nullptr});
            case Token::Type::Gen:
                return make_node({Expr::Kind::Generator, 0, nullptr, nullptr});
            case Token::Type::Var:
                return make_node({Expr::Kind::Variable, 0, nullptr, nullptr});
            case Token::Type::LParen: {
                ExprPtr e = expr();
                expect(Token::Type::RParen, "')'");
                return e;
            }
            default:
                throw ParseError("expected a value", t.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Rational function as a quotient of plain polynomials, the evaluation form
// used during lowering before conversion to partial fractions.
struct Frac {
    Poly num;
    Poly den;
};

Frac frac_pow(const Frac& f, long e);

Frac eval_frac(const Expr& e, const FieldSpecPtr& spec) {
    const Poly one = Poly::constant(FieldElement::one(spec));
    switch (e.kind) {
        case Expr::Kind::Number:
            return {Poly::constant(FieldElement::from_integer(spec, e.number)), one};
        case Expr::Kind::Generator:
            return {Poly::constant(FieldElement::generator(spec)), one};
        case Expr::Kind::Variable:
            return {Poly(spec, {FieldElement::zero(spec), FieldElement::one(spec)}), one};
        case Expr::Kind::Neg: {
            Frac a = eval_frac(*e.a, spec);
            return {-a.num, a.den};
        }
        case Expr::Kind::Add: {
            Frac a = eval_frac(*e.a, spec), b = eval_frac(*e.b, spec);
            return {a.num * b.den + b.num * a.den, a.den * b.den};
        }
        case Expr::Kind::Sub: {
            Frac a = eval_frac(*e.a, spec), b = eval_frac(*e.b, spec);
            return {a.num * b.den - b.num * a.den, a.den * b.den};
        }
        case Expr::Kind::Mul: {
            Frac a = eval_frac(*e.a, spec), b = eval_frac(*e.b, spec);
            return {a.num * b.num, a.den * b.den};
        }
        case Expr::Kind::Div: {
            Frac a = eval_frac(*e.a, spec), b = eval_frac(*e.b, spec);
            if (b.num.is_zero()) throw DivisionByZero("division by the zero function");
            return {a.num * b.den, a.den * b.num};
        }
        case Expr::Kind::Pow:
            return frac_pow(eval_frac(*e.a, spec), e.exponent);
    }
    throw ParseError("malformed expression tree", 0);
}

Frac frac_pow(const Frac& f, long e) {
    if (e >= 0) return {f.num.pow(static_cast<int>(e)), f.den.pow(static_cast<int>(e))};
    if (f.num.is_zero()) throw DivisionByZero("zero raised to a negative power");
    return {f.den.pow(static_cast<int>(-e)), f.num.pow(static_cast<int>(-e))};
}

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    return Parser(tokenize(text)).parse();
}

RatFunc lower_to_rfunc(const ExprPtr& e, const PointConfigPtr& config) {
    const auto& spec = config->field_spec();
    Frac f = eval_frac(*e, spec);
    if (f.den.is_zero()) throw DivisionByZero("division by the zero function");
    if (f.num.is_zero()) return RatFunc::zero(config);

    Poly g = Poly::gcd(f.num, f.den);
    if (g.degree() > 0) {
        f.num = Poly::div_exact(f.num, g);
        f.den = Poly::div_exact(f.den, g);
    }
    std::vector<int> orders(config->n(), 0);
    for (int i = 0; i < config->n(); ++i) {
        const Poly lin = Poly::linear(config->point(i));
        while (f.den.degree() > 0 && f.den.eval(config->point(i)).is_zero()) {
            f.den = Poly::div_exact(f.den, lin);
            ++orders[i];
        }
    }
    if (f.den.degree() > 0)
        throw ForeignPole("expression has a pole outside the marked points");
    f.num = f.num.scaled(f.den.leading().inv());
    return RatFunc::from_polyfraction(config, {f.num, orders});
}

FieldElement eval_field_expr(const ExprPtr& e, const FieldSpecPtr& spec) {
    Frac f = eval_frac(*e, spec);
    if (f.num.degree() > 0 || f.den.degree() > 0)
        throw ParseError("the variable t is not allowed in this expression", 0);
    if (f.den.is_zero() || f.den.coeff(0).is_zero())
        throw DivisionByZero("division by zero");
    if (f.num.is_zero()) return FieldElement::zero(spec);
    return f.num.coeff(0) / f.den.coeff(0);
}

std::vector<Rational> eval_modulus_expr(const ExprPtr& e) {
    // Evaluate over Q with `s` as the polynomial variable by reusing the
    // field machinery: lower over the trivial field with s in the t role.
    // The grammar maps s to the generator, so instead evaluate structurally.
    struct Ev {
        static std::vector<Rational> run(const Expr& e) {
            switch (e.kind) {
                case Expr::Kind::Number:
                    return {Rational(e.number)};
                case Expr::Kind::Generator:
                    return {Rational(0), Rational(1)};
                case Expr::Kind::Variable:
                    throw ParseError("the variable t is not allowed in a field modulus", 0);
                case Expr::Kind::Neg: {
                    auto a = run(*e.a);
                    for (auto& c : a) c = -c;
                    return a;
                }
                case Expr::Kind::Add:
                case Expr::Kind::Sub: {
                    auto a = run(*e.a);
                    auto b = run(*e.b);
                    if (b.size() > a.size()) a.resize(b.size(), Rational(0));
                    for (std::size_t i = 0; i < b.size(); ++i)
                        a[i] += e.kind == Expr::Kind::Add ? b[i] : -b[i];
                    return trim(std::move(a));
                }
                case Expr::Kind::Mul: {
                    auto a = run(*e.a);
                    auto b = run(*e.b);
                    if (a.empty() || b.empty()) return {};
                    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
                    for (std::size_t i = 0; i < a.size(); ++i)
                        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
                    return trim(std::move(out));
                }
                case Expr::Kind::Div: {
                    auto a = run(*e.a);
                    auto b = run(*e.b);
                    if (b.size() != 1 || b[0] == 0)
                        throw BadParameters("modulus may only be divided by a nonzero constant");
                    for (auto& c : a) c /= b[0];
                    return a;
                }
                case Expr::Kind::Pow: {
                    if (e.exponent < 0)
                        throw BadParameters("modulus exponents must be nonnegative");
                    std::vector<Rational> out{Rational(1)};
                    auto base = run(*e.a);
                    for (long i = 0; i < e.exponent; ++i) {
                        if (base.empty()) return {};
                        std::vector<Rational> next(out.size() + base.size() - 1, Rational(0));
                        for (std::size_t p = 0; p < out.size(); ++p)
                            for (std::size_t q = 0; q < base.size(); ++q)
                                next[p + q] += out[p] * base[q];
                        out = trim(std::move(next));
                    }
                    return out;
                }
            }
            throw ParseError("malformed expression tree", 0);
        }
        static std::vector<Rational> trim(std::vector<Rational> v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
            return v;
        }
    };
    auto coeffs = Ev::run(*e);
    if (coeffs.size() < 2)
        throw BadParameters("field modulus must have degree at least 1");
    if (coeffs.back() != 1)
        throw BadParameters("field modulus must be monic");
    return coeffs;
}

RatFunc parse_ratfunc(const std::string& text, const PointConfigPtr& config) {
    return lower_to_rfunc(parse_expr(text), config);
}

FieldElement parse_field_element(const std::string& text, const FieldSpecPtr& spec) {
    return eval_field_expr(parse_expr(text), spec);
}

std::vector<Rational> parse_modulus(const std::string& text) {
    return eval_modulus_expr(parse_expr(text));
}

}  // namespace npv
