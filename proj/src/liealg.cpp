#include "npv/liealg.hpp"

#include "npv/errors.hpp"

namespace npv {

ExtElement ExtElement::from_derivation(Derivation d) {
    const int n = d.config()->n();
    std::vector<FieldElement> c(n, FieldElement::zero(d.config()->field_spec()));
    return ExtElement{std::move(d), std::move(c)};
}

ExtElement ExtElement::central_generator(const PointConfigPtr& config, int i) {
    if (i < 0 || i >= config->n()) throw BadIndex("central generator index out of range");
    ExtElement e = from_derivation(Derivation{RatFunc::zero(config)});
    e.central[i] = FieldElement::one(config->field_spec());
    return e;
}

ExtElement operator+(const ExtElement& x, const ExtElement& y) {
    ExtElement r{x.deriv + y.deriv, x.central};
    for (std::size_t i = 0; i < r.central.size(); ++i) r.central[i] += y.central[i];
    return r;
}

ExtElement operator-(const ExtElement& x, const ExtElement& y) {
    ExtElement r{x.deriv - y.deriv, x.central};
    for (std::size_t i = 0; i < r.central.size(); ++i) r.central[i] -= y.central[i];
    return r;
}

Derivation bracket(const Derivation& x, const Derivation& y) {
    return {x.coeff * y.coeff.derivative() - y.coeff * x.coeff.derivative()};
}

namespace {

// Adds c * (t - a_j)^e to r, expanding nonnegative powers into the t basis.
void add_shifted_power(RatFunc& r, const PointConfigPtr& config, int j, int e,
                       const FieldElement& c) {
    if (c.is_zero()) return;
    if (e < 0) {
        r = r + RatFunc::pole_power(config, j, -e).scaled(c);
    } else {
        Poly p = Poly::linear(config->point(j)).pow(e).scaled(c);
        r = r + RatFunc::from_poly(config, p);
    }
}

}  // namespace

Derivation bracket_basis_positive(const PointConfigPtr& config, int i, int k, int j, int m) {
    if (i == j) throw BadIndex("bracket_basis_positive wants i != j");
    if (i < 0 || i >= config->n() || j < 0 || j >= config->n())
        throw BadIndex("pole index out of range");
    if (k < 0) throw BadParameters("k must be >= 0");
    const auto& spec = config->field_spec();
    const FieldElement diff = config->point(j) - config->point(i);  // a_j - a_i
    RatFunc r = RatFunc::zero(config);
    for (int s = 0; s <= k; ++s) {
        Integer c = binomial_general(Integer(k), s) * (m + s - k);
        if (c == 0) continue;
        FieldElement coeff = FieldElement::from_integer(spec, c) * diff.pow(s);
        add_shifted_power(r, config, j, k + m - s - 1, coeff);
    }
    return {r};
}

Derivation bracket_basis_negative(const PointConfigPtr& config, int i, int k, int j, int l) {
    if (i == j) throw BadIndex("bracket_basis_negative wants i != j");
    if (i < 0 || i >= config->n() || j < 0 || j >= config->n())
        throw BadIndex("pole index out of range");
    if (k < 1 || l < 1) throw BadParameters("orders must be >= 1");
    const auto& spec = config->field_spec();
    const FieldElement& ai = config->point(i);
    const FieldElement& aj = config->point(j);
    RatFunc r = RatFunc::zero(config);
    for (int m = 1; m <= k + 1; ++m) {
        Integer c = binomial_general(Integer(k + l - m), k + 1 - m) * (2 * k + 1 - m);
        if (c == 0) continue;
        FieldElement coeff = FieldElement::from_integer(spec, c) *
                             ((ai - aj).pow(l) * (aj - ai).pow(k + 1 - m)).inv();
        r = r + RatFunc::pole_power(config, i, m).scaled(coeff);
    }
    for (int m = 1; m <= l + 1; ++m) {
        Integer c = binomial_general(Integer(l + k - m), l + 1 - m) * (2 * l + 1 - m);
        if (c == 0) continue;
        FieldElement coeff = FieldElement::from_integer(spec, c) *
                             ((aj - ai).pow(k) * (ai - aj).pow(l + 1 - m)).inv();
        r = r - RatFunc::pole_power(config, j, m).scaled(coeff);
    }
    return {r};
}

namespace {

// phi_i on the ordered basis pair (t^p d, (t-a_i)^{-m} d), p >= 0, m >= 1.
FieldElement phi_first_line(const PointConfigPtr& config, int i, int p, int m) {
    const auto& spec = config->field_spec();
    const FieldElement& ai = config->point(i);
    long cube = static_cast<long>(m + 1) * (m + 1) * (m + 1) - (m + 1);  // l^3 - l, l = m+1
    if (ai.is_zero()) {
        if (p == m + 2) return FieldElement::from_integer(spec, cube);
        return FieldElement::zero(spec);
    }
    Integer b = binomial_general(Integer(p), m + 2);
    if (b == 0) return FieldElement::zero(spec);
    return FieldElement::from_integer(spec, b * cube) * ai.pow(p - m - 2);
}

// phi_i on ((t-a_i)^{-k} d, (t-a_j)^{-l} d), j != i.
FieldElement phi_second_line(const PointConfigPtr& config, int i, int k, int j, int l) {
    const auto& spec = config->field_spec();
    Integer num = factorial(k + l + 1) / (factorial(k - 1) * factorial(l - 1));
    const FieldElement& ai = config->point(i);
    const FieldElement& aj = config->point(j);
    return FieldElement::from_integer(spec, num) *
           ((aj - ai).pow(k + 1) * (ai - aj).pow(l + 1)).inv();
}

// phi_i on an ordered pair of basis tags, with skew-symmetry imposed.
FieldElement phi_basis(const PointConfigPtr& config, int i,
                       const BasisTag& a, const BasisTag& b) {
    const auto& spec = config->field_spec();
    if (!a.is_pole && b.is_pole && b.pole == i)
        return phi_first_line(config, i, a.exp, b.exp);
    if (a.is_pole && a.pole == i && b.is_pole && b.pole != i)
        return phi_second_line(config, i, a.exp, b.pole, b.exp);
    if (!b.is_pole && a.is_pole && a.pole == i)
        return -phi_first_line(config, i, b.exp, a.exp);
    if (b.is_pole && b.pole == i && a.is_pole && a.pole != i)
        return -phi_second_line(config, i, b.exp, a.pole, a.exp);
    return FieldElement::zero(spec);
}

}  // namespace

FieldElement cocycle_phi(int i, const Derivation& x, const Derivation& y) {
    const auto& config = x.config();
    if (!(*config == *y.config()))
        throw ConfigMismatch("cocycle over different point configurations");
    if (i < 0 || i >= config->n()) throw BadIndex("cocycle index out of range");
    FieldElement acc = FieldElement::zero(config->field_spec());
    auto xt = x.coeff.terms();
    auto yt = y.coeff.terms();
    for (const auto& [ta, ca] : xt)
        for (const auto& [tb, cb] : yt) {
            FieldElement v = phi_basis(config, i, ta, tb);
            if (!v.is_zero()) acc += ca * cb * v;
        }
    return acc;
}

FieldElement cocycle_separating(const Derivation& x, const Derivation& y) {
    const auto& config = x.config();
    FieldElement acc = FieldElement::zero(config->field_spec());
    for (int i = 0; i < config->n(); ++i) acc += cocycle_phi(i, x, y);
    return acc;
}

ExtElement ext_bracket(const ExtElement& x, const ExtElement& y) {
    Derivation d = bracket(x.deriv, y.deriv);
    const int n = d.config()->n();
    std::vector<FieldElement> central;
    central.reserve(n);
    for (int i = 0; i < n; ++i) central.push_back(cocycle_phi(i, x.deriv, y.deriv));
    return ExtElement{std::move(d), std::move(central)};
}

bool verify_identity_cor21(const FieldElement& x, const FieldElement& y,
                           const FieldElement& z, int m, int k, int l, int r) {
    if (x == y || y == z || x == z)
        throw DegenerateInput("identity requires pairwise distinct points");
    if (m < 1 || k < 1 || l < 1 || r < 1 || r > m + 1)
        throw BadParameters("parameters out of range");
    const auto& spec = x.spec();
    auto I = [&](const Integer& v) { return FieldElement::from_integer(spec, v); };

    FieldElement lhs = FieldElement::zero(spec);
    for (int s = 1; s <= k + 1; ++s) {
        Integer c = binomial_general(Integer(k + l - s), k + 1 - s) *
                    binomial_general(Integer(m + s - r), m + 1 - r) *
                    (2 * k + 1 - s) * (2 * m + 1 - r);
        if ((l + s) % 2 != 0) c = -c;
        if (c == 0) continue;
        lhs += I(c) * ((z - y).pow(l + k + 1 - s) * (y - x).pow(m + s + 1 - r)).inv();
    }
    for (int s = 1; s <= l + 1; ++s) {
        Integer c = binomial_general(Integer(l + k - s), l + 1 - s) *
                    binomial_general(Integer(m + s - r), m + 1 - r) *
                    (2 * l + 1 - s) * (2 * m + 1 - r);
        if ((k + s) % 2 != 0) c = -c;
        if (c == 0) continue;
        lhs -= I(c) * ((y - z).pow(l + k + 1 - s) * (z - x).pow(m + s + 1 - r)).inv();
    }

    FieldElement rhs = FieldElement::zero(spec);
    const int sign_kl = (k + l) % 2 == 0 ? 1 : -1;
    for (int s = r - 1; s <= m + 1; ++s) {
        Integer c1 = binomial_general(Integer(m + k - s), m + 1 - s) *
                     binomial_general(Integer(s + l - r), s + 1 - r) *
                     (2 * m + 1 - s) * (2 * s + 1 - r) * sign_kl;
        if (c1 != 0)
            rhs += I(c1) * ((y - x).pow(k + m + 1 - s) * (z - x).pow(l + s + 1 - r)).inv();
        Integer c2 = binomial_general(Integer(m + l - s), m + 1 - s) *
                     binomial_general(Integer(s + k - r), s + 1 - r) *
                     (2 * m + 1 - s) * (2 * s + 1 - r) * sign_kl;
        if (c2 != 0)
            rhs -= I(c2) * ((z - x).pow(l + m + 1 - s) * (y - x).pow(k + s + 1 - r)).inv();
    }
    return lhs == rhs;
}

bool verify_identity_cor41(const FieldElement& x, const FieldElement& y,
                           int k, int l, int m) {
    if (k < 1 || l < 1 || m < 1 || m >= k + l + 3)
        throw BadParameters("parameters out of range");
    if (x == y) return true;
    const auto& spec = x.spec();
    FieldElement acc = FieldElement::zero(spec);
    // weight (s+1)^3 - (s+1): the separating-cocycle diagonal value at order s+1
    for (int s = 1; s <= k + 1; ++s) {
        Integer b = binomial_general(Integer(k + l - s), k + 1 - s) *
                    binomial_general(Integer(m), s + 2);
        if (b == 0) continue;
        long w = static_cast<long>(s + 1) * (s + 1) * (s + 1) - (s + 1);
        Integer c = b * (2 * k + 1 - s) * w;
        if (c == 0) continue;
        acc += FieldElement::from_integer(spec, c) * (y - x).pow(s) * x.pow(m - s - 2);
    }
    for (int s = 1; s <= l + 1; ++s) {
        Integer b = binomial_general(Integer(l + k - s), l + 1 - s) *
                    binomial_general(Integer(m), s + 2);
        if (b == 0) continue;
        long w = static_cast<long>(s + 1) * (s + 1) * (s + 1) - (s + 1);
        Integer c = b * (2 * l + 1 - s) * w;
        if (c == 0) continue;
        acc += FieldElement::from_integer(spec, c) * (x - y).pow(s) * y.pow(m - s - 2);
    }
    return acc.is_zero();
}

}  // namespace npv
