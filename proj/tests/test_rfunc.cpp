#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npv/errors.hpp"
#include "npv/rfunc.hpp"
#include "npv/sampler.hpp"

using namespace npv;

namespace {

PointConfigPtr two_points() {
    auto q = FieldSpec::rationals();
    return PointConfig::make(q, {FieldElement::zero(q), FieldElement::one(q)});
}

PointConfigPtr three_points() {
    auto q = FieldSpec::rationals();
    return PointConfig::make(
        q, {FieldElement::zero(q), FieldElement::one(q), FieldElement::from_integer(q, -2)});
}

// Product in numerator/denominator form: the multiplication oracle.
PolyFraction pf_mul(const PolyFraction& a, const PolyFraction& b) {
    PolyFraction out{a.numerator * b.numerator, a.pole_orders};
    for (std::size_t i = 0; i < out.pole_orders.size(); ++i)
        out.pole_orders[i] += b.pole_orders[i];
    return out;
}

}  // namespace

TEST_CASE("point configuration rejects repeated points") {
    auto q = FieldSpec::rationals();
    CHECK_THROWS_AS(PointConfig::make(q, {FieldElement::one(q), FieldElement::one(q)}),
                    DegenerateInput);
}

TEST_CASE("canonical partial fractions of 1/(t(t-1))") {
    auto cfg = two_points();
    RatFunc f = RatFunc::pole_power(cfg, 0, 1) * RatFunc::pole_power(cfg, 1, 1);
    // 1/(t(t-1)) = (t-1)^{-1} - t^{-1}
    RatFunc expect = RatFunc::pole_power(cfg, 1, 1) - RatFunc::pole_power(cfg, 0, 1);
    CHECK(f == expect);
}

TEST_CASE("same-pole products add exponents") {
    auto cfg = two_points();
    CHECK(RatFunc::pole_power(cfg, 0, 2) * RatFunc::pole_power(cfg, 0, 3) ==
          RatFunc::pole_power(cfg, 0, 5));
}

TEST_CASE("polynomial times principal part") {
    auto cfg = two_points();
    // t * t^{-2} = t^{-1}
    CHECK(RatFunc::t_power(cfg, 1) * RatFunc::pole_power(cfg, 0, 2) ==
          RatFunc::pole_power(cfg, 0, 1));
    // t * (t-1)^{-1} = 1 + (t-1)^{-1}
    CHECK(RatFunc::t_power(cfg, 1) * RatFunc::pole_power(cfg, 1, 1) ==
          RatFunc::one(cfg) + RatFunc::pole_power(cfg, 1, 1));
}

TEST_CASE("multiplication matches the fraction oracle") {
    auto cfg = three_points();
    Sampler rng(2024);
    for (int it = 0; it < 500; ++it) {
        RatFunc f = rng.ratfunc(cfg);
        RatFunc g = rng.ratfunc(cfg);
        RatFunc prod = f * g;
        RatFunc oracle = RatFunc::from_polyfraction(
            cfg, pf_mul(f.to_polyfraction(), g.to_polyfraction()));
        REQUIRE(prod == oracle);
    }
}

TEST_CASE("polyfraction round trip") {
    auto cfg = three_points();
    Sampler rng(7);
    for (int it = 0; it < 200; ++it) {
        RatFunc f = rng.ratfunc(cfg);
        REQUIRE(RatFunc::from_polyfraction(cfg, f.to_polyfraction()) == f);
    }
}

TEST_CASE("derivative basics and Leibniz rule") {
    auto cfg = two_points();
    // d/dt (t-1)^{-3} = -3 (t-1)^{-4}
    auto q = cfg->field_spec();
    CHECK(RatFunc::pole_power(cfg, 1, 3).derivative() ==
          RatFunc::pole_power(cfg, 1, 4).scaled(FieldElement::from_integer(q, -3)));
    CHECK(RatFunc::t_power(cfg, 3).derivative() ==
          RatFunc::t_power(cfg, 2).scaled(FieldElement::from_integer(q, 3)));
    Sampler rng(11);
    for (int it = 0; it < 200; ++it) {
        RatFunc f = rng.ratfunc(cfg);
        RatFunc g = rng.ratfunc(cfg);
        REQUIRE((f * g).derivative() == f.derivative() * g + f * g.derivative());
    }
}

TEST_CASE("evaluation and pole detection") {
    auto cfg = two_points();
    auto q = cfg->field_spec();
    RatFunc f = RatFunc::t_power(cfg, 2) + RatFunc::pole_power(cfg, 0, 1);
    // f(2) = 4 + 1/2
    CHECK(f.eval(FieldElement::from_integer(q, 2)) ==
          FieldElement(q, make_rational(9, 2)));
    CHECK_THROWS_AS(f.eval(FieldElement::zero(q)), PoleEvaluation);
    // No pole at t = 1, even though 1 is marked.
    CHECK(f.eval(FieldElement::one(q)) == FieldElement::from_integer(q, 2));
}

TEST_CASE("unit recognition") {
    auto cfg = two_points();
    auto q = cfg->field_spec();
    // 3 t^2 (t-1)^{-1}
    RatFunc u = RatFunc::t_power(cfg, 2).scaled(FieldElement::from_integer(q, 3)) *
                RatFunc::pole_power(cfg, 1, 1);
    auto fac = u.unit_factor();
    REQUIRE(fac.has_value());
    CHECK(fac->first == FieldElement::from_integer(q, 3));
    CHECK(fac->second == std::vector<int>{2, -1});

    // t^2 - t + 1 has no marked roots: not a unit.
    RatFunc nonunit = RatFunc::t_power(cfg, 2) - RatFunc::t_power(cfg, 1) + RatFunc::one(cfg);
    CHECK(!nonunit.unit_factor().has_value());
    CHECK(!RatFunc::zero(cfg).unit_factor().has_value());
    // Sums of basis terms with matching support are not automatically units.
    CHECK((RatFunc::t_power(cfg, 1) + RatFunc::one(cfg) + RatFunc::pole_power(cfg, 0, 1))
              .unit_factor()
              .has_value() == false);
}

TEST_CASE("basis term ordering is deterministic") {
    auto cfg = two_points();
    RatFunc f = RatFunc::pole_power(cfg, 1, 2) + RatFunc::t_power(cfg, 1) +
                RatFunc::pole_power(cfg, 0, 1);
    auto terms = f.terms();
    REQUIRE(terms.size() == 3);
    CHECK(!terms[0].first.is_pole);
    CHECK(terms[1].first.is_pole);
    CHECK(terms[1].first.pole == 0);
    CHECK(terms[2].first.pole == 1);
}
