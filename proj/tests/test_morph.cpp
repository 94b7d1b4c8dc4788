#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npv/errors.hpp"
#include "npv/morph.hpp"
#include "npv/sampler.hpp"

using namespace npv;

namespace {

PointConfigPtr config_of(std::vector<Rational> pts) {
    auto q = FieldSpec::rationals();
    std::vector<FieldElement> v;
    for (const auto& p : pts) v.emplace_back(q, p);
    return PointConfig::make(q, std::move(v));
}

FieldElement fe(long v) {
    return FieldElement::from_integer(FieldSpec::rationals(), v);
}

}  // namespace

TEST_CASE("Moebius maps through triples") {
    auto q = FieldSpec::rationals();
    ExtPoint inf = std::nullopt;
    std::array<ExtPoint, 3> src = {ExtPoint(fe(0)), ExtPoint(fe(1)), inf};
    std::array<ExtPoint, 3> dst = {ExtPoint(fe(2)), inf, ExtPoint(fe(-1))};
    MobiusMap m = MobiusMap::through_triples(src, dst, q);
    CHECK(m.apply(fe(0)) == ExtPoint(fe(2)));
    CHECK(!m.apply(fe(1)).has_value());
    CHECK(m.apply(inf) == ExtPoint(fe(-1)));
    // Inverse undoes it, composition with inverse is the identity.
    CHECK(m.inverse().apply(fe(2)) == ExtPoint(fe(0)));
    CHECK(compose(m.inverse(), m) == MobiusMap::identity(q));
    CHECK_THROWS_AS(MobiusMap(fe(1), fe(2), fe(2), fe(4)), DegenerateInput);
}

TEST_CASE("two-point automorphism group is dihedral of order six") {
    auto cfg = config_of({0, 1});
    GroupTable g = automorphism_group(cfg);
    CHECK(g.order() == 6);
    CHECK(g.label.str() == "D3");
    // Composition table is a Latin square with a two-sided identity.
    for (int i = 0; i < 6; ++i) {
        CHECK(g.mul[g.identity][i] == i);
        CHECK(g.mul[i][g.identity] == i);
        CHECK(g.mul[i][g.inverse_of(i)] == g.identity);
        CHECK(g.order() % g.element_order(i) == 0);
    }
}

TEST_CASE("automorphisms are Lie algebra homomorphisms") {
    auto cfg = config_of({0, 1, -1});
    GroupTable g = automorphism_group(cfg);
    REQUIRE(g.order() == 8);
    CHECK(g.label.str() == "D4");
    Sampler rng(21);
    for (const auto& m : g.elements) {
        for (int it = 0; it < 10; ++it) {
            Derivation x = rng.derivation(cfg, 4);
            Derivation y = rng.derivation(cfg, 4);
            REQUIRE(apply_to_deriv(m, bracket(x, y)) ==
                    bracket(apply_to_deriv(m, x), apply_to_deriv(m, y)));
        }
        // Ring morphism check on the function level.
        for (int it = 0; it < 10; ++it) {
            RatFunc f = rng.ratfunc(cfg, 4);
            RatFunc h = rng.ratfunc(cfg, 4);
            REQUIRE(apply_to_rfunc(m, f * h) ==
                    apply_to_rfunc(m, f) * apply_to_rfunc(m, h));
            REQUIRE(apply_to_rfunc(m, f + h) ==
                    apply_to_rfunc(m, f) + apply_to_rfunc(m, h));
        }
    }
}

TEST_CASE("composition of morphism maps stays in the group") {
    auto cfg = config_of({0, 1, 5});
    GroupTable g = automorphism_group(cfg);
    CHECK(g.order() == 4);
    CHECK(g.label.str() == "D2");
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) {
            MobiusMap prod = compose(g.elements[i].map, g.elements[j].map);
            CHECK(g.elements[g.mul[i][j]].map == prod);
        }
}

TEST_CASE("isomorphism detection between configurations") {
    auto a = config_of({0, 1, 5});
    // y = -4 = 1 - x lies in the cross-ratio orbit of x = 5.
    auto b = config_of({0, 1, -4});
    auto maps = find_isomorphisms(a, b);
    CHECK(!maps.empty());
    for (const auto& m : maps) {
        CHECK(*m.source == *b);
        CHECK(*m.target == *a);
    }
    auto c = config_of({0, 1, 7});
    CHECK(find_isomorphisms(a, c).empty());
    // Size mismatch: not isomorphic, empty result.
    CHECK(find_isomorphisms(a, config_of({0, 1})).empty());
}

TEST_CASE("single marked point has an infinite group") {
    auto a = config_of({0});
    CHECK_THROWS_AS(automorphism_group(a), InfiniteGroup);
    CHECK_THROWS_AS(find_isomorphisms(a, a), InfiniteGroup);
}

TEST_CASE("first-kind subgroup is cyclic") {
    for (auto pts : {std::vector<Rational>{0, 1}, std::vector<Rational>{0, 1, -1},
                     std::vector<Rational>{1, -1, 2, -2}}) {
        auto cfg = config_of(pts);
        GroupTable h = first_kind_subgroup(cfg);
        CHECK(h.label.type == GroupLabel::Type::Cyclic);
        for (const auto& m : h.elements) CHECK(m.kind == MorphKind::First);
    }
}

TEST_CASE("second-kind set matches the second-kind automorphism count") {
    for (auto pts : {std::vector<Rational>{0, 1}, std::vector<Rational>{0, 1, 5},
                     std::vector<Rational>{0, 1, -1}, std::vector<Rational>{1, -1, 2, -2}}) {
        auto cfg = config_of(pts);
        GroupTable g = automorphism_group(cfg);
        int second = 0;
        for (const auto& m : g.elements)
            if (m.kind == MorphKind::Second) ++second;
        CHECK(static_cast<int>(second_kind_set(cfg).size()) == second);
    }
}

TEST_CASE("order bound") {
    for (auto pts : {std::vector<Rational>{0, 1}, std::vector<Rational>{0, 1, 5},
                     std::vector<Rational>{0, 1, -1}, std::vector<Rational>{1, -1, 2, -2},
                     std::vector<Rational>{0, -1, -2, 3}}) {
        auto cfg = config_of(pts);
        const long n = cfg->n();
        CHECK(automorphism_group(cfg).order() <= n * n * n - n * n + n);
    }
}

TEST_CASE("morphism data reconstructs the function map") {
    // For every automorphism, the closed-form image of the basis agrees with
    // classification data: poles permute by perm, first-kind maps are affine.
    auto cfg = config_of({0, 1, -1});
    for (const auto& m : automorphism_group(cfg).elements) {
        for (int i = 0; i < 3; ++i) {
            RatFunc img = apply_to_rfunc(m, RatFunc::pole_power(cfg, i, 1));
            if (m.kind == MorphKind::Second && i == m.anchor) {
                // The anchor's pole moves to infinity: the image is polynomial.
                CHECK(img.poly_degree() == 1);
                for (int j = 0; j < 3; ++j) CHECK(img.pole_order(j) == 0);
            } else {
                // Otherwise the image has its pole exactly at perm[i].
                for (int j = 0; j < 3; ++j)
                    CHECK((img.pole_order(j) > 0) == (j == m.perm[i]));
            }
        }
        if (m.kind == MorphKind::First)
            CHECK(apply_to_rfunc(m, RatFunc::t_power(cfg, 1)).poly_degree() == 1);
    }
}
