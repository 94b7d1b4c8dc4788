#include "npv/commands.hpp"

#include <sstream>

#include "npv/errors.hpp"
#include "npv/parser.hpp"
#include "npv/sampler.hpp"

namespace npv {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

PointConfigPtr parse_points(const std::string& text, const FieldSpecPtr& spec) {
    std::vector<FieldElement> pts;
    for (const auto& part : split_commas(text))
        pts.push_back(parse_field_element(part, spec));
    return PointConfig::make(spec, std::move(pts));
}

}  // namespace

Session Session::from_flags(const std::string& field_text, const std::string& points_text,
                            std::uint64_t seed, int iterations, int slack) {
    Session s;
    s.spec = field_text.empty() ? FieldSpec::rationals()
                                : FieldSpec::make(parse_modulus(field_text));
    s.config = parse_points(points_text, s.spec);
    s.seed = seed;
    s.iterations = iterations;
    s.slack = slack;
    return s;
}

nlohmann::json field_element_json(const FieldElement& x) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : x.coeffs()) a.push_back(to_string(c));
    return a;
}

nlohmann::json ratfunc_json(const RatFunc& f) {
    nlohmann::json poly = nlohmann::json::array();
    for (int k = 0; k <= f.poly_degree(); ++k) poly.push_back(field_element_json(f.poly_coeff(k)));
    nlohmann::json principal = nlohmann::json::object();
    for (int i = 0; i < f.config()->n(); ++i) {
        const int ord = f.pole_order(i);
        if (ord == 0) continue;
        nlohmann::json coeffs = nlohmann::json::array();
        for (int l = 1; l <= ord; ++l) coeffs.push_back(field_element_json(f.principal_coeff(i, l)));
        principal[std::to_string(i + 1)] = coeffs;
    }
    return {{"poly", poly}, {"principal", principal}};
}

nlohmann::json morphism_json(const Morphism& m) {
    nlohmann::json perm = nlohmann::json::array();
    for (int p : m.perm) perm.push_back(p + 1);
    return {{"matrix",
             {field_element_json(m.map.p()), field_element_json(m.map.q()),
              field_element_json(m.map.r()), field_element_json(m.map.s())}},
            {"kind", m.kind == MorphKind::First ? "first" : "second"},
            {"perm", perm},
            {"c", field_element_json(m.c)}};
}

nlohmann::json cmd_aut(const Session& session) {
    GroupTable g = automorphism_group(session.config);
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& m : g.elements) elements.push_back(morphism_json(m));
    return {{"order", g.order()}, {"label", g.label.str()}, {"elements", elements}};
}

nlohmann::json cmd_iso(const Session& session, const std::string& other_points) {
    PointConfigPtr other = parse_points(other_points, session.spec);
    std::vector<Morphism> maps = find_isomorphisms(session.config, other);
    bool first = false, second = false;
    nlohmann::json jmaps = nlohmann::json::array();
    for (const auto& m : maps) {
        (m.kind == MorphKind::First ? first : second) = true;
        jmaps.push_back(morphism_json(m));
    }
    nlohmann::json kinds = nlohmann::json::array();
    if (first) kinds.push_back("first");
    if (second) kinds.push_back("second");
    return {{"isomorphic", !maps.empty()}, {"kinds_found", kinds}, {"maps", jmaps}};
}

nlohmann::json cmd_bracket(const Session& session, const std::string& e1,
                           const std::string& e2) {
    Derivation x{parse_ratfunc(e1, session.config)};
    Derivation y{parse_ratfunc(e2, session.config)};
    return {{"result", ratfunc_json(bracket(x, y).coeff)}};
}

nlohmann::json cmd_cocycle(const Session& session, int i, const std::string& e1,
                           const std::string& e2) {
    Derivation x{parse_ratfunc(e1, session.config)};
    Derivation y{parse_ratfunc(e2, session.config)};
    return {{"result", field_element_json(cocycle_phi(i - 1, x, y))}};
}

namespace {

DensityParamsPtr parse_density_params(const Session& session,
                                      const std::vector<std::string>& alpha,
                                      const std::string& beta) {
    std::vector<FieldElement> a;
    for (const auto& text : alpha) a.push_back(parse_field_element(text, session.spec));
    return DensityParams::make(session.config, std::move(a),
                               parse_field_element(beta, session.spec));
}

}  // namespace

nlohmann::json cmd_act(const Session& session, const std::vector<std::string>& alpha,
                       const std::string& beta, const std::string& f, const std::string& g) {
    DensityParamsPtr params = parse_density_params(session, alpha, beta);
    Derivation x{parse_ratfunc(f, session.config)};
    DensityElement v{params, parse_ratfunc(g, session.config)};
    return {{"result", ratfunc_json(act(x, v).g)}};
}

nlohmann::json cmd_irreducible(const Session& session, const std::vector<std::string>& alpha,
                               const std::string& beta) {
    DensityParamsPtr params = parse_density_params(session, alpha, beta);
    IrreducibilityReport rep = is_irreducible(*params);
    nlohmann::json out = {{"irreducible", rep.irreducible}};
    if (!rep.irreducible) out["reason"] = rep.reason;
    return out;
}

namespace {

struct SuiteResult {
    int failures = 0;
    std::string first_counterexample;

    void record(bool ok, int iter, const std::string& detail) {
        if (ok) return;
        if (failures == 0)
            first_counterexample = "iteration " + std::to_string(iter) + ": " + detail;
        ++failures;
    }
};

void run_jacobi(const Session& s, Sampler& rng, SuiteResult& out) {
    for (int it = 0; it < s.iterations; ++it) {
        Derivation x = rng.derivation(s.config);
        Derivation y = rng.derivation(s.config);
        Derivation z = rng.derivation(s.config);
        bool ok = bracket(x, bracket(y, z)) ==
                  bracket(bracket(x, y), z) + bracket(y, bracket(x, z));
        if (ok) {
            ExtElement a = ExtElement::from_derivation(x);
            ExtElement b = ExtElement::from_derivation(y);
            ExtElement c = ExtElement::from_derivation(z);
            ExtElement acc = ext_bracket(ext_bracket(a, b), c) +
                             ext_bracket(ext_bracket(b, c), a) +
                             ext_bracket(ext_bracket(c, a), b);
            ok = acc == ExtElement::from_derivation(Derivation{RatFunc::zero(s.config)});
        }
        out.record(ok, it, "x=" + x.coeff.str() + " y=" + y.coeff.str() + " z=" + z.coeff.str());
    }
}

void run_cocycle(const Session& s, Sampler& rng, SuiteResult& out) {
    for (int it = 0; it < s.iterations; ++it) {
        Derivation x = rng.derivation(s.config);
        Derivation y = rng.derivation(s.config);
        Derivation z = rng.derivation(s.config);
        bool ok = true;
        for (int i = 0; ok && i < s.config->n(); ++i) {
            FieldElement acc = cocycle_phi(i, bracket(x, y), z) +
                               cocycle_phi(i, bracket(y, z), x) +
                               cocycle_phi(i, bracket(z, x), y);
            ok = acc.is_zero();
        }
        out.record(ok, it, "x=" + x.coeff.str() + " y=" + y.coeff.str() + " z=" + z.coeff.str());
    }
}

void run_cor21(const Session& s, Sampler& rng, SuiteResult& out) {
    const auto& spec = s.spec;
    for (int it = 0; it < s.iterations; ++it) {
        Rational xr = rng.small_rational();
        Rational yr, zr;
        do { yr = rng.small_rational(); } while (yr == xr);
        do { zr = rng.small_rational(); } while (zr == xr || zr == yr);
        FieldElement x(spec, xr), y(spec, yr), z(spec, zr);
        int m = static_cast<int>(rng.int_in(1, 5));
        int k = static_cast<int>(rng.int_in(1, 5));
        int l = static_cast<int>(rng.int_in(1, 5));
        bool ok = true;
        for (int r = 1; ok && r <= m + 1; ++r)
            ok = verify_identity_cor21(x, y, z, m, k, l, r);
        std::ostringstream d;
        d << "x=" << to_string(xr) << " y=" << to_string(yr) << " z=" << to_string(zr)
          << " m=" << m << " k=" << k << " l=" << l;
        out.record(ok, it, d.str());
    }
}

void run_cor41(const Session& s, Sampler& rng, SuiteResult& out) {
    const auto& spec = s.spec;
    for (int it = 0; it < s.iterations; ++it) {
        Rational xr = rng.small_nonzero_rational();
        Rational yr;
        do { yr = rng.small_nonzero_rational(); } while (yr == xr);
        FieldElement x(spec, xr), y(spec, yr);
        int k = static_cast<int>(rng.int_in(1, 4));
        int l = static_cast<int>(rng.int_in(1, 4));
        bool ok = true;
        for (int m = 1; ok && m < k + l + 3; ++m)
            ok = verify_identity_cor41(x, y, k, l, m);
        std::ostringstream d;
        d << "x=" << to_string(xr) << " y=" << to_string(yr) << " k=" << k << " l=" << l;
        out.record(ok, it, d.str());
    }
}

void run_closedform(const Session& s, Sampler& rng, SuiteResult& out) {
    if (s.config->n() < 2)
        throw BadParameters("the closed-form suite needs at least two marked points");
    const int n = s.config->n();
    for (int it = 0; it < s.iterations; ++it) {
        int i = static_cast<int>(rng.int_in(0, n - 1));
        int j;
        do { j = static_cast<int>(rng.int_in(0, n - 1)); } while (j == i);
        bool ok;
        std::ostringstream d;
        if (rng.int_in(0, 1) == 0) {
            int k = static_cast<int>(rng.int_in(0, 5));
            int m = static_cast<int>(rng.int_in(-5, 5));
            RatFunc x = RatFunc::from_poly(s.config, Poly::linear(s.config->point(i)).pow(k));
            RatFunc y = m >= 0
                ? RatFunc::from_poly(s.config, Poly::linear(s.config->point(j)).pow(m))
                : RatFunc::pole_power(s.config, j, -m);
            ok = bracket_basis_positive(s.config, i, k, j, m) ==
                 bracket(Derivation{x}, Derivation{y});
            d << "positive i=" << i << " k=" << k << " j=" << j << " m=" << m;
        } else {
            int k = static_cast<int>(rng.int_in(1, 5));
            int l = static_cast<int>(rng.int_in(1, 5));
            ok = bracket_basis_negative(s.config, i, k, j, l) ==
                 bracket(Derivation{RatFunc::pole_power(s.config, i, k)},
                         Derivation{RatFunc::pole_power(s.config, j, l)});
            d << "negative i=" << i << " k=" << k << " j=" << j << " l=" << l;
        }
        out.record(ok, it, d.str());
    }
}

void run_module_axiom(const Session& s, Sampler& rng, SuiteResult& out) {
    const auto& spec = s.spec;
    const std::vector<Rational> betas = {make_rational(0), make_rational(1),
                                         make_rational(-1), make_rational(1, 2)};
    for (int it = 0; it < s.iterations; ++it) {
        std::vector<FieldElement> alpha;
        for (int i = 0; i < s.config->n(); ++i) {
            // Mix integral and fractional weights across the grid.
            if (rng.int_in(0, 1) == 0)
                alpha.emplace_back(spec, make_rational(rng.int_in(-3, 3)));
            else
                alpha.emplace_back(spec, rng.small_rational());
        }
        FieldElement beta(spec, betas[static_cast<std::size_t>(it) % betas.size()]);
        DensityParamsPtr params = DensityParams::make(s.config, alpha, beta);
        Derivation x = rng.derivation(s.config, 4);
        Derivation y = rng.derivation(s.config, 4);
        DensityElement v{params, rng.ratfunc(s.config, 4)};
        bool ok = act(bracket(x, y), v) == act(x, act(y, v)) - act(y, act(x, v));
        out.record(ok, it,
                   "x=" + x.coeff.str() + " y=" + y.coeff.str() + " g=" + v.g.str());
    }
}

}  // namespace

nlohmann::json cmd_verify(const Session& session, const std::string& suite) {
    Sampler rng(session.seed);
    SuiteResult res;
    if (suite == "jacobi") run_jacobi(session, rng, res);
    else if (suite == "cocycle") run_cocycle(session, rng, res);
    else if (suite == "cor21") run_cor21(session, rng, res);
    else if (suite == "cor41") run_cor41(session, rng, res);
    else if (suite == "closedform") run_closedform(session, rng, res);
    else if (suite == "module-axiom") run_module_axiom(session, rng, res);
    else throw BadParameters("unknown verify suite: " + suite);
    nlohmann::json out = {{"suite", suite},
                          {"seed", session.seed},
                          {"iterations", session.iterations},
                          {"pass", res.failures == 0},
                          {"failures", res.failures}};
    if (res.failures > 0)
        out["first_counterexample"] = res.first_counterexample;
    else
        out["first_counterexample"] = nullptr;
    return out;
}

}  // namespace npv
