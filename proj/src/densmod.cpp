#include "npv/densmod.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "npv/errors.hpp"

namespace npv {

DensityParams::DensityParams(PointConfigPtr config, std::vector<FieldElement> alpha,
                             FieldElement beta)
    : config_(std::move(config)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (static_cast<int>(alpha_.size()) != config_->n())
        throw BadParameters("alpha must have one entry per marked point");
}

bool DensityParams::alpha_integral() const {
    return std::all_of(alpha_.begin(), alpha_.end(),
                       [](const FieldElement& a) { return a.is_rational_integer(); });
}

DensityParamsPtr DensityParams::make(PointConfigPtr config, std::vector<FieldElement> alpha,
                                     FieldElement beta) {
    return std::make_shared<DensityParams>(std::move(config), std::move(alpha),
                                           std::move(beta));
}

RatFunc sigma(const DensityParams& params) {
    RatFunc s = RatFunc::zero(params.config());
    for (int j = 0; j < params.n(); ++j) {
        if (params.alpha(j).is_zero()) continue;
        s = s + RatFunc::pole_power(params.config(), j, 1).scaled(params.alpha(j));
    }
    return s;
}

DensityElement act(const Derivation& x, const DensityElement& v) {
    if (!(*x.config() == *v.params->config()))
        throw ConfigMismatch("derivation and density element over different configurations");
    const RatFunc& f = x.coeff;
    const RatFunc& g = v.g;
    RatFunc out = f * g.derivative() + (f * g) * sigma(*v.params) +
                  (f.derivative() * g).scaled(v.params->beta());
    return {v.params, out};
}

IrreducibilityReport is_irreducible(const DensityParams& params) {
    const FieldElement one = FieldElement::one(params.config()->field_spec());
    if (params.beta().is_zero() && params.alpha_integral())
        return {false, "beta0_alpha_integral"};
    if (params.beta() == one) {
        if (params.n() >= 2) return {false, "beta1_n_ge_2"};
        if (params.alpha(0).is_rational_integer()) return {false, "beta1_n1_alpha_integral"};
    }
    return {true, ""};
}

namespace {

long alpha_as_long(const DensityParams& params, int i) {
    return mpz_class(params.alpha(i).rational_value()).get_si();
}

}  // namespace

RatFunc marked_power_product(const PointConfigPtr& config, const std::vector<long>& exps) {
    RatFunc out = RatFunc::one(config);
    for (int i = 0; i < config->n(); ++i) {
        const long e = exps.at(i);
        if (e == 0) continue;
        if (e > 0)
            out = out * RatFunc::from_poly(config,
                                           Poly::linear(config->point(i)).pow(static_cast<int>(e)));
        else
            out = out * RatFunc::pole_power(config, i, static_cast<int>(-e));
    }
    return out;
}

DensityElement trivial_submodule_generator(const DensityParamsPtr& params) {
    if (!params->beta().is_zero() || !params->alpha_integral())
        throw NotApplicable("needs beta = 0 and integral alpha");
    std::vector<long> exps(params->n());
    for (int i = 0; i < params->n(); ++i) exps[i] = -alpha_as_long(*params, i);
    return {params, marked_power_product(params->config(), exps)};
}

DensityElement partial_image(const DensityParamsPtr& params, const RatFunc& g) {
    return {params, g.derivative() + g * sigma(*params)};
}

namespace {

// Antiderivative of a residue-free element, termwise over the canonical basis.
RatFunc antiderivative(const RatFunc& w) {
    const auto& config = w.config();
    const auto& spec = config->field_spec();
    RatFunc out = RatFunc::zero(config);
    for (const auto& [tag, c] : w.terms()) {
        if (!tag.is_pole) {
            FieldElement f = c / FieldElement::from_integer(spec, tag.exp + 1);
            out = out + RatFunc::t_power(config, tag.exp + 1).scaled(f);
        } else {
            if (tag.exp == 1)
                throw BadParameters("antiderivative of a simple pole is not in the ring");
            FieldElement f = c / FieldElement::from_integer(spec, 1 - tag.exp);
            out = out + RatFunc::pole_power(config, tag.pole, tag.exp - 1).scaled(f);
        }
    }
    return out;
}

struct TagLess {
    bool operator()(const BasisTag& a, const BasisTag& b) const {
        return std::tie(a.is_pole, a.pole, a.exp) < std::tie(b.is_pole, b.pole, b.exp);
    }
};

// Solves A x = rhs by exact Gaussian elimination; columns index the unknowns.
std::optional<std::vector<FieldElement>> solve_linear(
    std::vector<std::vector<FieldElement>> a, std::vector<FieldElement> rhs,
    const FieldSpecPtr& spec) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        std::swap(rhs[r], rhs[piv]);
        FieldElement inv = a[r][c].inv();
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        rhs[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            FieldElement f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;
    std::vector<FieldElement> x(cols, FieldElement::zero(spec));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

}  // namespace

std::optional<RatFunc> in_partial_image(const DensityParams& params, const RatFunc& v,
                                        int degree_slack) {
    const auto& config = params.config();
    const auto& spec = config->field_spec();
    const int n = params.n();
    if (v.is_zero()) return RatFunc::zero(config);

    if (params.alpha_integral()) {
        // Multiply by the unit u = prod (t - a_i)^{alpha_i}; since u'/u = sigma,
        // v = g' + g sigma  iff  v u = (g u)', i.e. v u has no simple-pole part.
        std::vector<long> exps(n), nexps(n);
        for (int i = 0; i < n; ++i) {
            exps[i] = alpha_as_long(params, i);
            nexps[i] = -exps[i];
        }
        RatFunc w = v * marked_power_product(config, exps);
        for (int i = 0; i < n; ++i)
            if (!w.principal_coeff(i, 1).is_zero()) return std::nullopt;
        return antiderivative(w) * marked_power_product(config, nexps);
    }

    // Bounded solve of g' + g sigma = v over a finite ansatz space.
    const int max_deg = std::max(v.poly_degree() + 1, 0);
    std::vector<BasisTag> unknowns;
    for (int k = 0; k <= max_deg; ++k) unknowns.push_back({false, 0, k});
    for (int i = 0; i < n; ++i) {
        int slack = degree_slack;
        if (params.alpha(i).is_rational_integer()) {
            long ai = alpha_as_long(params, i);
            if (ai > 0) slack = static_cast<int>(ai);
        }
        int bound = std::max(v.pole_order(i) - 1, 0) + slack;
        for (int l = 1; l <= bound; ++l) unknowns.push_back({true, i, l});
    }

    RatFunc sig = sigma(params);
    std::vector<RatFunc> images;
    images.reserve(unknowns.size());
    std::map<BasisTag, int, TagLess> row_of;
    auto note_tags = [&](const RatFunc& f) {
        for (const auto& [tag, c] : f.terms())
            if (!row_of.count(tag)) {
                int idx = static_cast<int>(row_of.size());
                row_of.emplace(tag, idx);
            }
    };
    for (const auto& u : unknowns) {
        RatFunc b = u.is_pole ? RatFunc::pole_power(config, u.pole, u.exp)
                              : RatFunc::t_power(config, u.exp);
        RatFunc img = b.derivative() + b * sig;
        note_tags(img);
        images.push_back(std::move(img));
    }
    note_tags(v);

    const int rows = static_cast<int>(row_of.size());
    const int cols = static_cast<int>(unknowns.size());
    std::vector<std::vector<FieldElement>> a(
        rows, std::vector<FieldElement>(cols, FieldElement::zero(spec)));
    std::vector<FieldElement> rhs(rows, FieldElement::zero(spec));
    for (int c = 0; c < cols; ++c)
        for (const auto& [tag, coeff] : images[c].terms()) a[row_of.at(tag)][c] = coeff;
    for (const auto& [tag, coeff] : v.terms()) rhs[row_of.at(tag)] = coeff;

    auto sol = solve_linear(std::move(a), std::move(rhs), spec);
    if (!sol) return std::nullopt;
    std::vector<std::pair<BasisTag, FieldElement>> terms;
    for (int c = 0; c < cols; ++c)
        if (!(*sol)[c].is_zero()) terms.emplace_back(unknowns[c], (*sol)[c]);
    return RatFunc::from_basis(config, terms);
}

DensityElement theorem51d_iso(const DensityParamsPtr& params0, const RatFunc& g) {
    if (!params0->beta().is_zero())
        throw NotApplicable("the intertwiner starts from beta = 0");
    if (params0->alpha_integral())
        throw NotApplicable("the intertwiner requires non-integral alpha");
    DensityParamsPtr target = DensityParams::make(
        params0->config(), params0->alpha(),
        FieldElement::one(params0->config()->field_spec()));
    return {target, g.derivative() + g * sigma(*params0)};
}

}  // namespace npv
