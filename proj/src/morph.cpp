#include "npv/morph.hpp"

#include <algorithm>

#include "npv/errors.hpp"

namespace npv {

MobiusMap::MobiusMap(FieldElement p, FieldElement q, FieldElement r, FieldElement s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
    if ((p_ * s_ - q_ * r_).is_zero())
        throw DegenerateInput("Moebius map must have nonzero determinant");
    normalize();
}

void MobiusMap::normalize() {
    const FieldElement* lead = nullptr;
    for (const FieldElement* x : {&p_, &q_, &r_, &s_})
        if (!x->is_zero()) { lead = x; break; }
    FieldElement f = lead->inv();
    p_ *= f;
    q_ *= f;
    r_ *= f;
    s_ *= f;
}

MobiusMap MobiusMap::identity(const FieldSpecPtr& spec) {
    return MobiusMap(FieldElement::one(spec), FieldElement::zero(spec),
                     FieldElement::zero(spec), FieldElement::one(spec));
}

ExtPoint MobiusMap::apply(const ExtPoint& z) const {
    if (!z.has_value()) {
        if (r_.is_zero()) return std::nullopt;
        return p_ / r_;
    }
    FieldElement den = r_ * *z + s_;
    if (den.is_zero()) return std::nullopt;
    return (p_ * *z + q_) / den;
}

ExtPoint mobius_apply(const MobiusMap& m, const ExtPoint& p) { return m.apply(p); }

MobiusMap MobiusMap::inverse() const {
    return MobiusMap(s_, -q_, -r_, p_);
}

MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
    return MobiusMap(f.p_ * g.p_ + f.q_ * g.r_, f.p_ * g.q_ + f.q_ * g.s_,
                     f.r_ * g.p_ + f.s_ * g.r_, f.r_ * g.q_ + f.s_ * g.s_);
}

namespace {

// Matrix of the map sending the distinct triple (z1, z2, z3) to (0, 1, inf).
MobiusMap to_standard_triple(const std::array<ExtPoint, 3>& z, const FieldSpecPtr& spec) {
    const FieldElement one = FieldElement::one(spec);
    const FieldElement zero = FieldElement::zero(spec);
    if (!z[0].has_value())  // z1 = inf: z -> (z2 - z3)/(z - z3)
        return MobiusMap(zero, *z[1] - *z[2], one, -*z[2]);
    if (!z[1].has_value())  // z2 = inf: z -> (z - z1)/(z - z3)
        return MobiusMap(one, -*z[0], one, -*z[2]);
    if (!z[2].has_value())  // z3 = inf: z -> (z - z1)/(z2 - z1)
        return MobiusMap(one, -*z[0], zero, *z[1] - *z[0]);
    FieldElement d23 = *z[1] - *z[2];
    FieldElement d21 = *z[1] - *z[0];
    return MobiusMap(d23, -*z[0] * d23, d21, -*z[2] * d21);
}

}  // namespace

MobiusMap MobiusMap::through_triples(const std::array<ExtPoint, 3>& src,
                                     const std::array<ExtPoint, 3>& dst,
                                     const FieldSpecPtr& spec) {
    return compose(to_standard_triple(dst, spec).inverse(), to_standard_triple(src, spec));
}

namespace {

bool in_marked_set(const PointConfigPtr& cfg, const ExtPoint& p) {
    if (!p.has_value()) return true;
    return cfg->index_of(*p) >= 0;
}

// Builds the Morphism record for a verified point map m with m(S_b) = S_a.
Morphism classify_map(const PointConfigPtr& a, const PointConfigPtr& b, const MobiusMap& m) {
    const auto& spec = a->field_spec();
    const int n = a->n();
    MobiusMap minv = m.inverse();
    Morphism out{b, a, m, MorphKind::First, std::vector<int>(n, -1),
                 FieldElement::one(spec), -1};
    if (m.is_affine()) {
        out.kind = MorphKind::First;
        // ring map sends t to minv(t) = (p t + q)/s, affine
        out.c = minv.p() / minv.s();
        for (int i = 0; i < n; ++i) {
            ExtPoint img = m.apply(b->point(i));
            out.perm[i] = a->index_of(*img);
        }
    } else {
        out.kind = MorphKind::Second;
        int i0 = -1;
        for (int i = 0; i < n; ++i)
            if (!m.apply(b->point(i)).has_value()) { i0 = i; break; }
        ExtPoint inf_img = m.apply(std::nullopt);
        int j0 = a->index_of(*inf_img);
        out.anchor = i0;
        out.perm[i0] = j0;
        for (int i = 0; i < n; ++i) {
            if (i == i0) continue;
            out.perm[i] = a->index_of(*m.apply(b->point(i)));
        }
        // phi(t - b_{i0}) = c / (t - a_{j0}); extract c from minv
        out.c = (minv.q() - b->point(i0) * minv.s()) / minv.r();
    }
    return out;
}

}  // namespace

std::vector<Morphism> find_isomorphisms(const PointConfigPtr& a, const PointConfigPtr& b) {
    if (!(*a->field_spec() == *b->field_spec()))
        throw SpecMismatch("configurations over different fields");
    if (a->n() != b->n()) return {};
    if (a->n() == 1)
        throw InfiniteGroup("the two-marked-point case has a continuous isomorphism family");
    const auto& spec = a->field_spec();
    const int n = a->n();

    std::vector<ExtPoint> sa, sb;
    sa.push_back(std::nullopt);
    sb.push_back(std::nullopt);
    for (int i = 0; i < n; ++i) {
        sa.push_back(a->point(i));
        sb.push_back(b->point(i));
    }
    const std::array<ExtPoint, 3> src = {sb[0], sb[1], sb[2]};

    std::vector<Morphism> out;
    std::vector<MobiusMap> seen;
    const int sz = n + 1;
    for (int u = 0; u < sz; ++u)
        for (int v = 0; v < sz; ++v) {
            if (v == u) continue;
            for (int w = 0; w < sz; ++w) {
                if (w == u || w == v) continue;
                MobiusMap m = MobiusMap::through_triples(src, {sa[u], sa[v], sa[w]}, spec);
                bool ok = true;
                for (const auto& p : sb)
                    if (!in_marked_set(a, m.apply(p))) { ok = false; break; }
                if (!ok) continue;
                if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
                seen.push_back(m);
                out.push_back(classify_map(a, b, m));
            }
        }
    return out;
}

RatFunc apply_to_rfunc(const Morphism& m, const RatFunc& f) {
    if (!(*f.config() == *m.source))
        throw ConfigMismatch("input is not over the morphism's source configuration");
    const auto& a = m.target;
    const auto& b = m.source;
    const auto& spec = a->field_spec();
    RatFunc out = RatFunc::zero(a);

    if (m.kind == MorphKind::First) {
        MobiusMap minv = m.map.inverse();
        const FieldElement cF = minv.p() / minv.s();
        const FieldElement dF = minv.q() / minv.s();
        Poly image_t(spec, {dF, cF});
        for (const auto& [tag, coeff] : f.terms()) {
            if (!tag.is_pole) {
                out = out + RatFunc::from_poly(a, image_t.pow(tag.exp)).scaled(coeff);
            } else {
                out = out + RatFunc::pole_power(a, m.perm[tag.pole], tag.exp)
                                .scaled(coeff * m.c.pow(-tag.exp));
            }
        }
        return out;
    }

    const int i0 = m.anchor;
    const int j0 = m.perm[i0];
    const FieldElement& b0 = b->point(i0);
    const FieldElement& aj0 = a->point(j0);
    Poly lin_j0 = Poly::linear(aj0);
    for (const auto& [tag, coeff] : f.terms()) {
        if (!tag.is_pole) {
            // t^k maps to (b0 + c/(t - a_j0))^k, expanded binomially
            const int k = tag.exp;
            for (int s = 0; s <= k; ++s) {
                FieldElement term = coeff *
                                    FieldElement::from_integer(spec, binomial_general(Integer(k), s)) *
                                    b0.pow(k - s) * m.c.pow(s);
                if (term.is_zero()) continue;
                if (s == 0)
                    out = out + RatFunc::constant(a, term);
                else
                    out = out + RatFunc::pole_power(a, j0, s).scaled(term);
            }
        } else if (tag.pole == i0) {
            // (t - b_{i0})^{-l} maps to c^{-l} (t - a_{j0})^l
            out = out + RatFunc::from_poly(a, lin_j0.pow(tag.exp))
                            .scaled(coeff * m.c.pow(-tag.exp));
        } else {
            // (t - b_i)^{-l} maps to (b_{i0} - b_i)^{-l} (t - a_{j0})^l (t - a_{tau(i)})^{-l}
            const int l = tag.exp;
            FieldElement scale = coeff * (b0 - b->point(tag.pole)).pow(-l);
            RatFunc img = RatFunc::from_poly(a, lin_j0.pow(l)) *
                          RatFunc::pole_power(a, m.perm[tag.pole], l);
            out = out + img.scaled(scale);
        }
    }
    return out;
}

Derivation apply_to_deriv(const Morphism& m, const Derivation& x) {
    RatFunc g = apply_to_rfunc(m, x.coeff);
    if (m.kind == MorphKind::First)
        return {g.scaled(m.c.inv())};
    const FieldElement& aj0 = m.target->point(m.perm[m.anchor]);
    RatFunc w = RatFunc::from_poly(m.target, Poly::linear(aj0).pow(2)).scaled(-m.c.inv());
    return {g * w};
}

int GroupTable::element_order(int i) const {
    int ord = 1;
    int cur = i;
    while (cur != identity) {
        cur = mul[cur][i];
        ++ord;
    }
    return ord;
}

int GroupTable::inverse_of(int i) const {
    for (int j = 0; j < order(); ++j)
        if (mul[i][j] == identity) return j;
    throw UnexpectedGroup("element without inverse in group table");
}

std::string GroupLabel::str() const {
    switch (type) {
        case Type::Cyclic: return "C" + std::to_string(param);
        case Type::Dihedral: return "D" + std::to_string(param);
        case Type::A4: return "A4";
        case Type::S4: return "S4";
        case Type::A5: return "A5";
    }
    return "?";
}

namespace {

GroupTable build_table(std::vector<Morphism> elements) {
    GroupTable g;
    g.elements = std::move(elements);
    const int n = g.order();
    g.identity = -1;
    for (int i = 0; i < n; ++i)
        if (g.elements[i].map == MobiusMap::identity(g.elements[i].source->field_spec())) {
            g.identity = i;
            break;
        }
    if (g.identity < 0) throw UnexpectedGroup("identity missing from group table");
    g.mul.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MobiusMap prod = compose(g.elements[i].map, g.elements[j].map);
            int idx = -1;
            for (int k = 0; k < n; ++k)
                if (g.elements[k].map == prod) { idx = k; break; }
            if (idx < 0) throw UnexpectedGroup("automorphism set not closed under composition");
            g.mul[i][j] = idx;
        }
    return g;
}

}  // namespace

GroupLabel classify_group(const std::vector<Morphism>& elements,
                          const std::vector<std::vector<int>>& mul, int identity) {
    GroupTable tmp;
    tmp.elements = elements;
    tmp.mul = mul;
    tmp.identity = identity;
    const int N = tmp.order();
    std::vector<int> orders(N);
    for (int i = 0; i < N; ++i) orders[i] = tmp.element_order(i);
    auto count_order = [&](int k) {
        return static_cast<int>(std::count(orders.begin(), orders.end(), k));
    };
    if (count_order(N) > 0) return {GroupLabel::Type::Cyclic, N};
    if (N == 4 && count_order(2) == 3) return {GroupLabel::Type::Dihedral, 2};
    if (N % 2 == 0 && N >= 6) {
        const int m = N / 2;
        if (count_order(m) > 0 && count_order(2) >= m)
            return {GroupLabel::Type::Dihedral, m};
    }
    if (N == 12 && count_order(2) == 3 && count_order(3) == 8)
        return {GroupLabel::Type::A4, 0};
    if (N == 24 && count_order(2) == 9 && count_order(3) == 8 && count_order(4) == 6)
        return {GroupLabel::Type::S4, 0};
    if (N == 60 && count_order(2) == 15 && count_order(3) == 20 && count_order(5) == 24)
        return {GroupLabel::Type::A5, 0};
    throw UnexpectedGroup("element-order signature matches no finite Moebius group");
}

GroupTable automorphism_group(const PointConfigPtr& a) {
    if (a->n() == 1)
        throw InfiniteGroup("automorphism group for a single marked point is C* x Z/2Z");
    GroupTable g = build_table(find_isomorphisms(a, a));
    g.label = classify_group(g.elements, g.mul, g.identity);
    return g;
}

GroupTable first_kind_subgroup(const PointConfigPtr& a) {
    if (a->n() == 1)
        throw InfiniteGroup("automorphism group for a single marked point is C* x Z/2Z");
    std::vector<Morphism> first;
    for (auto& m : find_isomorphisms(a, a))
        if (m.kind == MorphKind::First) first.push_back(std::move(m));
    GroupTable g = build_table(std::move(first));
    g.label = classify_group(g.elements, g.mul, g.identity);
    return g;
}

namespace {

bool multiset_equal(std::vector<FieldElement> xs, const std::vector<FieldElement>& ys) {
    if (xs.size() != ys.size()) return false;
    for (const auto& y : ys) {
        auto it = std::find(xs.begin(), xs.end(), y);
        if (it == xs.end()) return false;
        xs.erase(it);
    }
    return true;
}

}  // namespace

std::vector<SecondKindTriple> second_kind_set(const PointConfigPtr& a) {
    const int n = a->n();
    std::vector<SecondKindTriple> out;
    for (int i = 0; i < n; ++i) {
        std::vector<FieldElement> invs;  // {(a_j - a_i)^{-1} | j != i}
        for (int j = 0; j < n; ++j)
            if (j != i) invs.push_back((a->point(j) - a->point(i)).inv());
        for (int ip = 0; ip < n; ++ip) {
            std::vector<FieldElement> target;  // {a_j - a_ip | j != ip}
            for (int j = 0; j < n; ++j)
                if (j != ip) target.push_back(a->point(j) - a->point(ip));
            if (invs.empty()) continue;  // n = 1: no constraint, not meaningful
            // c is pinned by matching the first difference against each target
            std::vector<FieldElement> tried;
            for (const auto& u : target) {
                FieldElement c = u / invs[0];
                if (std::find(tried.begin(), tried.end(), c) != tried.end()) continue;
                tried.push_back(c);
                std::vector<FieldElement> scaled;
                scaled.reserve(invs.size());
                for (const auto& v : invs) scaled.push_back(c * v);
                if (multiset_equal(scaled, target))
                    out.push_back({i, ip, c});
            }
        }
    }
    return out;
}

IsoClassReport iso_class_membership(const PointConfigPtr& a, const PointConfigPtr& b) {
    IsoClassReport rep;
    for (const auto& m : find_isomorphisms(a, b)) {
        if (m.kind == MorphKind::First) rep.first_kind = true;
        else rep.second_kind = true;
    }
    return rep;
}

}  // namespace npv
