#ifndef NPV_PARSER_HPP
#define NPV_PARSER_HPP

#include <memory>
#include <string>
#include <vector>

#include "npv/rfunc.hpp"

namespace npv {

/// Expression tree for the little input language: integer literals, the field
/// generator `s`, the ring variable `t`, + - * / ^ and parentheses.
struct Expr {
    enum class Kind { Number, Generator, Variable, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind;
    Integer number;                  // Number
    std::shared_ptr<const Expr> a;   // unary/binary left
    std::shared_ptr<const Expr> b;   // binary right
    long exponent = 0;               // Pow
};
using ExprPtr = std::shared_ptr<const Expr>;

// Recursive descent with precedence ^ > unary - > * / > + - (left-assoc).
// Exponents must be (optionally negated) integer literals.
ExprPtr parse_expr(const std::string& text);

// Evaluates in numerator/denominator form and converts to the canonical
// partial-fraction representation. A pole outside the marked set raises
// ForeignPole; a vanishing divisor raises DivisionByZero.
RatFunc lower_to_rfunc(const ExprPtr& e, const PointConfigPtr& config);

// Evaluates an expression containing no `t` to a field element.
FieldElement eval_field_expr(const ExprPtr& e, const FieldSpecPtr& spec);

// Evaluates an expression in `s` over Q to dense polynomial coefficients
// (low to high); used for the --field modulus, which must come out monic.
std::vector<Rational> eval_modulus_expr(const ExprPtr& e);

// One-step conveniences.
RatFunc parse_ratfunc(const std::string& text, const PointConfigPtr& config);
FieldElement parse_field_element(const std::string& text, const FieldSpecPtr& spec);
std::vector<Rational> parse_modulus(const std::string& text);

}  // namespace npv

#endif
