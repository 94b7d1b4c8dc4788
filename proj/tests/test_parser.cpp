#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npv/errors.hpp"
#include "npv/parser.hpp"
#include "npv/sampler.hpp"

using namespace npv;

namespace {

PointConfigPtr two_points() {
    auto q = FieldSpec::rationals();
    return PointConfig::make(q, {FieldElement::zero(q), FieldElement::one(q)});
}

}  // namespace

TEST_CASE("basic expressions") {
    auto cfg = two_points();
    auto q = cfg->field_spec();
    CHECK(parse_ratfunc("0", cfg).is_zero());
    CHECK(parse_ratfunc("2+3*4", cfg) == RatFunc::constant(cfg, FieldElement::from_integer(q, 14)));
    CHECK(parse_ratfunc("(2+3)*4", cfg) ==
          RatFunc::constant(cfg, FieldElement::from_integer(q, 20)));
    CHECK(parse_ratfunc("t^-1", cfg) == RatFunc::pole_power(cfg, 0, 1));
    CHECK(parse_ratfunc("1/t", cfg) == RatFunc::pole_power(cfg, 0, 1));
    // Precedence: ^ binds tighter than unary minus.
    CHECK(parse_ratfunc("-t^2", cfg) == -RatFunc::t_power(cfg, 2));
    CHECK(parse_ratfunc("1/2*t", cfg) ==
          RatFunc::t_power(cfg, 1).scaled(FieldElement(q, make_rational(1, 2))));
}

TEST_CASE("partial fraction lowering") {
    auto cfg = two_points();
    CHECK(parse_ratfunc("1/(t*(t-1))", cfg) ==
          RatFunc::pole_power(cfg, 1, 1) - RatFunc::pole_power(cfg, 0, 1));
    // Cancellation before pole analysis.
    CHECK(parse_ratfunc("(t-2)/(t-2)", cfg) == RatFunc::one(cfg));
    CHECK(parse_ratfunc("(t^2-1)/(t-1)", cfg) ==
          RatFunc::t_power(cfg, 1) + RatFunc::one(cfg));
}

TEST_CASE("errors") {
    auto cfg = two_points();
    CHECK_THROWS_AS(parse_ratfunc("1/(t-2)", cfg), ForeignPole);
    CHECK_THROWS_AS(parse_ratfunc("1/0", cfg), DivisionByZero);
    CHECK_THROWS_AS(parse_ratfunc("0^-1", cfg), DivisionByZero);
    CHECK_THROWS_AS(parse_expr("t+"), ParseError);
    CHECK_THROWS_AS(parse_expr("(t"), ParseError);
    CHECK_THROWS_AS(parse_expr("t^x"), ParseError);
    CHECK_THROWS_AS(parse_expr("2 @ 3"), ParseError);
    try {
        parse_expr("1+*2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("field element evaluation") {
    auto k = FieldSpec::make({make_rational(3), make_rational(0), make_rational(1)});
    FieldElement s = FieldElement::generator(k);
    CHECK(parse_field_element("(1+s)/2", k) ==
          (FieldElement::one(k) + s) * FieldElement(k, make_rational(1, 2)));
    CHECK(parse_field_element("s^2", k) == FieldElement::from_integer(k, -3));
    CHECK_THROWS_AS(parse_field_element("t+1", k), ParseError);
}

TEST_CASE("modulus evaluation") {
    CHECK(parse_modulus("s") == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(parse_modulus("s^2+3") ==
          std::vector<Rational>{Rational(3), Rational(0), Rational(1)});
    CHECK(parse_modulus("s^2+s+1") ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
    CHECK_THROWS_AS(parse_modulus("2*s"), BadParameters);
    CHECK_THROWS_AS(parse_modulus("5"), BadParameters);
    CHECK_THROWS_AS(parse_modulus("s/(s+1)"), BadParameters);
}

TEST_CASE("print and reparse round trip") {
    auto cfg = two_points();
    Sampler rng(53);
    for (int it = 0; it < 200; ++it) {
        RatFunc f = rng.ratfunc(cfg);
        REQUIRE(parse_ratfunc(f.str(), cfg) == f);
    }
    // Over an extension field, coefficients print as expressions in s.
    auto k = FieldSpec::make({make_rational(3), make_rational(0), make_rational(1)});
    FieldElement s = FieldElement::generator(k);
    auto cfgk = PointConfig::make(k, {FieldElement::zero(k), s});
    Sampler rng2(59);
    for (int it = 0; it < 200; ++it) {
        RatFunc f = rng2.ratfunc(cfgk);
        REQUIRE(parse_ratfunc(f.str(), cfgk) == f);
    }
}
