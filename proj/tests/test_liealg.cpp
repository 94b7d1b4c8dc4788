#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npv/errors.hpp"
#include "npv/liealg.hpp"
#include "npv/sampler.hpp"

using namespace npv;

namespace {

PointConfigPtr config_of(std::vector<long> pts) {
    auto q = FieldSpec::rationals();
    std::vector<FieldElement> v;
    for (long p : pts) v.push_back(FieldElement::from_integer(q, p));
    return PointConfig::make(q, std::move(v));
}

// (t - a_i)^e as a derivation coefficient, for e of either sign.
RatFunc shifted_power(const PointConfigPtr& cfg, int i, int e) {
    if (e >= 0) return RatFunc::from_poly(cfg, Poly::linear(cfg->point(i)).pow(e));
    return RatFunc::pole_power(cfg, i, -e);
}

}  // namespace

TEST_CASE("Witt relations on polynomial vectors") {
    auto cfg = config_of({0, 1});
    auto q = cfg->field_spec();
    for (int m = 0; m <= 4; ++m)
        for (int k = 0; k <= 4; ++k) {
            Derivation lhs = bracket(Derivation{RatFunc::t_power(cfg, m)},
                                     Derivation{RatFunc::t_power(cfg, k)});
            RatFunc expect = (m + k >= 1 ? RatFunc::t_power(cfg, m + k - 1)
                                         : RatFunc::zero(cfg))
                                 .scaled(FieldElement::from_integer(q, k - m));
            REQUIRE(lhs.coeff == expect);
        }
}

TEST_CASE("closed-form brackets match the generic bracket") {
    auto cfg = config_of({0, 1, -2});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (int k = 0; k <= 3; ++k)
                for (int m = -3; m <= 3; ++m) {
                    Derivation lhs = bracket_basis_positive(cfg, i, k, j, m);
                    Derivation rhs = bracket(Derivation{shifted_power(cfg, i, k)},
                                             Derivation{shifted_power(cfg, j, m)});
                    REQUIRE(lhs == rhs);
                }
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= 4; ++l) {
                    Derivation lhs = bracket_basis_negative(cfg, i, k, j, l);
                    Derivation rhs = bracket(Derivation{shifted_power(cfg, i, -k)},
                                             Derivation{shifted_power(cfg, j, -l)});
                    REQUIRE(lhs == rhs);
                }
        }
}

TEST_CASE("Jacobi identity on random triples") {
    auto cfg = config_of({0, 1, -2});
    Sampler rng(5);
    for (int it = 0; it < 300; ++it) {
        Derivation x = rng.derivation(cfg);
        Derivation y = rng.derivation(cfg);
        Derivation z = rng.derivation(cfg);
        REQUIRE(bracket(x, bracket(y, z)) ==
                bracket(bracket(x, y), z) + bracket(y, bracket(x, z)));
    }
}

TEST_CASE("cocycle condition for every phi_i") {
    auto cfg = config_of({0, 1, -2});
    Sampler rng(6);
    for (int it = 0; it < 300; ++it) {
        Derivation x = rng.derivation(cfg, 4);
        Derivation y = rng.derivation(cfg, 4);
        Derivation z = rng.derivation(cfg, 4);
        for (int i = 0; i < 3; ++i) {
            FieldElement acc = cocycle_phi(i, bracket(x, y), z) +
                               cocycle_phi(i, bracket(y, z), x) +
                               cocycle_phi(i, bracket(z, x), y);
            REQUIRE(acc.is_zero());
        }
    }
}

TEST_CASE("skew symmetry of the cocycles") {
    auto cfg = config_of({0, 1, -2});
    Sampler rng(8);
    for (int it = 0; it < 100; ++it) {
        Derivation x = rng.derivation(cfg);
        Derivation y = rng.derivation(cfg);
        for (int i = 0; i < 3; ++i)
            REQUIRE((cocycle_phi(i, x, y) + cocycle_phi(i, y, x)).is_zero());
    }
}

TEST_CASE("diagonal cocycle table") {
    // phi_i on ((t-a_i)^{k+1} d, (t-a_i)^{-l+1} d) is delta_{k,l} (l^3 - l),
    // for both the zero and nonzero marked-point branches.
    for (auto pts : {std::vector<long>{0, 1}, std::vector<long>{2, 5}}) {
        auto cfg = config_of(pts);
        auto q = cfg->field_spec();
        for (int i = 0; i < 2; ++i)
            for (int k = -5; k <= 5; ++k)
                for (int l = -5; l <= 5; ++l) {
                    Derivation x{shifted_power(cfg, i, k + 1)};
                    Derivation y{shifted_power(cfg, i, -l + 1)};
                    long expect = k == l ? static_cast<long>(l) * l * l - l : 0;
                    REQUIRE(cocycle_phi(i, x, y) ==
                            FieldElement::from_integer(q, expect));
                }
    }
}

TEST_CASE("separating cocycle kills cross-pole negative pairs") {
    auto cfg = config_of({0, 1, -2});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= 6; ++k)
                for (int l = 1; l <= 6; ++l) {
                    Derivation x{RatFunc::pole_power(cfg, i, k)};
                    Derivation y{RatFunc::pole_power(cfg, j, l)};
                    REQUIRE(cocycle_separating(x, y).is_zero());
                }
        }
}

TEST_CASE("central extension bracket") {
    auto cfg = config_of({0, 1});
    Sampler rng(9);
    // Central generators are inert.
    for (int i = 0; i < 2; ++i) {
        ExtElement c = ExtElement::central_generator(cfg, i);
        ExtElement x = ExtElement::from_derivation(rng.derivation(cfg));
        ExtElement zero = ExtElement::from_derivation(Derivation{RatFunc::zero(cfg)});
        CHECK(ext_bracket(c, x) == zero);
        CHECK(ext_bracket(x, c) == zero);
    }
    // The central coordinates of a bracket are the cocycle values.
    for (int it = 0; it < 100; ++it) {
        Derivation x = rng.derivation(cfg);
        Derivation y = rng.derivation(cfg);
        ExtElement b = ext_bracket(ExtElement::from_derivation(x),
                                   ExtElement::from_derivation(y));
        CHECK(b.deriv == bracket(x, y));
        for (int i = 0; i < 2; ++i) CHECK(b.central[i] == cocycle_phi(i, x, y));
    }
}

TEST_CASE("four-sum structure identity") {
    auto q = FieldSpec::rationals();
    Sampler rng(13);
    for (int it = 0; it < 100; ++it) {
        Rational xr = rng.small_rational();
        Rational yr, zr;
        do { yr = rng.small_rational(); } while (yr == xr);
        do { zr = rng.small_rational(); } while (zr == xr || zr == yr);
        FieldElement x(q, xr), y(q, yr), z(q, zr);
        int m = static_cast<int>(rng.int_in(1, 5));
        int k = static_cast<int>(rng.int_in(1, 5));
        int l = static_cast<int>(rng.int_in(1, 5));
        for (int r = 1; r <= m + 1; ++r)
            REQUIRE(verify_identity_cor21(x, y, z, m, k, l, r));
    }
}

TEST_CASE("two-sum cocycle identity") {
    auto q = FieldSpec::rationals();
    Sampler rng(14);
    for (int it = 0; it < 100; ++it) {
        Rational xr = rng.small_nonzero_rational();
        Rational yr;
        do { yr = rng.small_nonzero_rational(); } while (yr == xr);
        FieldElement x(q, xr), y(q, yr);
        int k = static_cast<int>(rng.int_in(1, 4));
        int l = static_cast<int>(rng.int_in(1, 4));
        for (int m = 1; m < k + l + 3; ++m)
            REQUIRE(verify_identity_cor41(x, y, k, l, m));
    }
}

TEST_CASE("identity parameter validation") {
    auto q = FieldSpec::rationals();
    FieldElement a = FieldElement::from_integer(q, 1);
    FieldElement b = FieldElement::from_integer(q, 2);
    FieldElement c = FieldElement::from_integer(q, 3);
    CHECK_THROWS_AS(verify_identity_cor21(a, a, c, 1, 1, 1, 1), DegenerateInput);
    CHECK_THROWS_AS(verify_identity_cor21(a, b, c, 1, 1, 1, 3), BadParameters);
    CHECK_THROWS_AS(verify_identity_cor41(a, b, 0, 1, 1), BadParameters);
}
