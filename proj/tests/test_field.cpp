#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npv/errors.hpp"
#include "npv/field.hpp"

using namespace npv;

TEST_CASE("rational helpers") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(is_integer(make_rational(6, 3)));
    CHECK(!is_integer(make_rational(1, 3)));
    CHECK(rational_from_string("-3/6") == make_rational(-1, 2));
    CHECK(to_string(make_rational(5, -10)) == "-1/2");

    CHECK(binomial_general(Integer(5), 2) == 10);
    CHECK(binomial_general(Integer(5), -1) == 0);
    CHECK(binomial_general(Integer(-3), 2) == 6);    // (-3)(-4)/2
    CHECK(binomial_general(Integer(2), 3) == 0);     // falling factorial hits zero
    CHECK(binomial_general(Integer(0), 0) == 1);
    CHECK(factorial(5) == 120);
}

TEST_CASE("plain rational field") {
    auto q = FieldSpec::rationals();
    CHECK(q->degree() == 1);
    FieldElement a(q, make_rational(3, 4));
    FieldElement b(q, make_rational(-2, 5));
    CHECK((a + b).rational_value() == make_rational(7, 20));
    CHECK((a * b).rational_value() == make_rational(-3, 10));
    CHECK((a / b).rational_value() == make_rational(-15, 8));
    CHECK(a.inv().rational_value() == make_rational(4, 3));
    CHECK(a.pow(0).is_one());
    CHECK(a.pow(-2).rational_value() == make_rational(16, 9));
    CHECK(FieldElement::from_integer(q, 7).is_rational_integer());
    CHECK(!a.is_rational_integer());
    // Degree-1 generator is the rational root of the modulus.
    auto shifted = FieldSpec::make({make_rational(-5), make_rational(1)});  // s - 5
    CHECK(FieldElement::generator(shifted).rational_value() == 5);
}

TEST_CASE("quadratic extension Q(sqrt(-3))") {
    auto k = FieldSpec::make({make_rational(3), make_rational(0), make_rational(1)});
    FieldElement s = FieldElement::generator(k);
    CHECK((s * s) == FieldElement::from_integer(k, -3));
    FieldElement x = s + FieldElement::from_integer(k, 2);  // 2 + s
    CHECK((x * x.inv()).is_one());
    // (2+s)(2-s) = 4 - s^2 = 7
    FieldElement conj = FieldElement::from_integer(k, 2) - s;
    CHECK(x * conj == FieldElement::from_integer(k, 7));
    CHECK(!x.is_rational());
    CHECK((x - s).is_rational());
    CHECK(x.pow(3) == x * x * x);
}

TEST_CASE("quartic cyclotomic field") {
    // s^4 + s^3 + s^2 + s + 1: s is a primitive fifth root of unity.
    auto k = FieldSpec::make({make_rational(1), make_rational(1), make_rational(1),
                              make_rational(1), make_rational(1)});
    FieldElement z = FieldElement::generator(k);
    CHECK(z.pow(5).is_one());
    CHECK(!z.pow(4).is_one());
    CHECK((z.pow(4) + z.pow(3) + z.pow(2) + z + FieldElement::one(k)).is_zero());
    CHECK((z.inv() == z.pow(4)));
}

TEST_CASE("reducible modulus detected on inversion") {
    // s^2 - 1 = (s-1)(s+1) is not irreducible; inverting s - 1 must fail.
    auto k = FieldSpec::make({make_rational(-1), make_rational(0), make_rational(1)});
    FieldElement bad = FieldElement::generator(k) - FieldElement::one(k);
    CHECK_THROWS_AS(bad.inv(), ReducibleModulus);
}

TEST_CASE("division by zero") {
    auto q = FieldSpec::rationals();
    CHECK_THROWS_AS(FieldElement::zero(q).inv(), DivisionByZero);
    CHECK_THROWS_AS(FieldElement::one(q) / FieldElement::zero(q), DivisionByZero);
}
