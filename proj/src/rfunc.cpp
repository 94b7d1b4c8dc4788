#include "npv/rfunc.hpp"

#include <sstream>

#include "npv/errors.hpp"

namespace npv {

PointConfig::PointConfig(FieldSpecPtr spec, std::vector<FieldElement> points)
    : spec_(std::move(spec)), points_(std::move(points)) {
    if (points_.empty())
        throw DegenerateInput("point configuration must contain at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j])
                throw DegenerateInput("marked points must be pairwise distinct");
}

PointConfigPtr PointConfig::make(FieldSpecPtr spec, std::vector<FieldElement> points) {
    return std::make_shared<PointConfig>(std::move(spec), std::move(points));
}

int PointConfig::index_of(const FieldElement& p) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == p) return static_cast<int>(i);
    return -1;
}

RatFunc::RatFunc(PointConfigPtr config) : config_(std::move(config)) {}

RatFunc RatFunc::zero(const PointConfigPtr& config) { return RatFunc(config); }

RatFunc RatFunc::one(const PointConfigPtr& config) {
    return constant(config, FieldElement::one(config->field_spec()));
}

RatFunc RatFunc::constant(const PointConfigPtr& config, const FieldElement& c) {
    RatFunc r(config);
    r.add_poly(0, c);
    r.trim();
    return r;
}

RatFunc RatFunc::t_power(const PointConfigPtr& config, int k) {
    if (k < 0) throw BadIndex("t_power wants k >= 0");
    RatFunc r(config);
    r.add_poly(k, FieldElement::one(config->field_spec()));
    return r;
}

RatFunc RatFunc::pole_power(const PointConfigPtr& config, int i, int l) {
    if (i < 0 || i >= config->n()) throw BadIndex("pole index out of range");
    if (l < 1) throw BadIndex("pole order must be >= 1");
    RatFunc r(config);
    r.add_principal(i, l, FieldElement::one(config->field_spec()));
    return r;
}

RatFunc RatFunc::from_basis(const PointConfigPtr& config,
                            const std::vector<std::pair<BasisTag, FieldElement>>& terms) {
    RatFunc r(config);
    for (const auto& [tag, c] : terms) {
        if (tag.is_pole) {
            if (tag.pole < 0 || tag.pole >= config->n())
                throw BadIndex("pole index out of range");
            if (tag.exp < 1) throw BadIndex("pole order must be >= 1");
            r.add_principal(tag.pole, tag.exp, c);
        } else {
            if (tag.exp < 0) throw BadIndex("polynomial exponent must be >= 0");
            r.add_poly(tag.exp, c);
        }
    }
    r.trim();
    return r;
}

RatFunc RatFunc::from_poly(const PointConfigPtr& config, const Poly& p) {
    RatFunc r(config);
    for (int k = 0; k <= p.degree(); ++k) r.add_poly(k, p.coeff(k));
    r.trim();
    return r;
}

void RatFunc::add_poly(int k, const FieldElement& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(poly_.size()) <= k)
        poly_.resize(k + 1, FieldElement::zero(field_spec()));
    poly_[k] += c;
}

void RatFunc::add_principal(int i, int l, const FieldElement& c) {
    if (c.is_zero()) return;
    auto& v = principal_[i];
    if (static_cast<int>(v.size()) < l) v.resize(l, FieldElement::zero(field_spec()));
    v[l - 1] += c;
}

void RatFunc::trim() {
    while (!poly_.empty() && poly_.back().is_zero()) poly_.pop_back();
    for (auto it = principal_.begin(); it != principal_.end();) {
        auto& v = it->second;
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        if (v.empty())
            it = principal_.erase(it);
        else
            ++it;
    }
}

void RatFunc::check_same_config(const RatFunc& g) const {
    if (!(*config_ == *g.config_))
        throw ConfigMismatch("rational functions over different point configurations");
}

bool RatFunc::is_zero() const { return poly_.empty() && principal_.empty(); }

int RatFunc::pole_order(int i) const {
    auto it = principal_.find(i);
    return it == principal_.end() ? 0 : static_cast<int>(it->second.size());
}

FieldElement RatFunc::poly_coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(poly_.size()))
        return FieldElement::zero(field_spec());
    return poly_[k];
}

FieldElement RatFunc::principal_coeff(int i, int l) const {
    auto it = principal_.find(i);
    if (it == principal_.end() || l < 1 || l > static_cast<int>(it->second.size()))
        return FieldElement::zero(field_spec());
    return it->second[l - 1];
}

std::vector<std::pair<BasisTag, FieldElement>> RatFunc::terms() const {
    std::vector<std::pair<BasisTag, FieldElement>> out;
    for (std::size_t k = 0; k < poly_.size(); ++k)
        if (!poly_[k].is_zero())
            out.push_back({BasisTag{false, 0, static_cast<int>(k)}, poly_[k]});
    for (const auto& [i, v] : principal_)
        for (std::size_t l = 0; l < v.size(); ++l)
            if (!v[l].is_zero())
                out.push_back({BasisTag{true, i, static_cast<int>(l) + 1}, v[l]});
    return out;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    for (auto& c : r.poly_) c = -c;
    for (auto& [i, v] : r.principal_)
        for (auto& c : v) c = -c;
    return r;
}

RatFunc RatFunc::scaled(const FieldElement& c) const {
    if (c.is_zero()) return RatFunc(config_);
    RatFunc r = *this;
    for (auto& x : r.poly_) x *= c;
    for (auto& [i, v] : r.principal_)
        for (auto& x : v) x *= c;
    return r;
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    f.check_same_config(g);
    RatFunc r = f;
    for (std::size_t k = 0; k < g.poly_.size(); ++k) r.add_poly(static_cast<int>(k), g.poly_[k]);
    for (const auto& [i, v] : g.principal_)
        for (std::size_t l = 0; l < v.size(); ++l)
            r.add_principal(i, static_cast<int>(l) + 1, v[l]);
    r.trim();
    return r;
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }

bool operator==(const RatFunc& f, const RatFunc& g) {
    f.check_same_config(g);
    return f.poly_ == g.poly_ && f.principal_ == g.principal_;
}

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    f.check_same_config(g);
    const auto& spec = f.field_spec();
    const auto& cfg = f.config_;
    RatFunc r(cfg);

    // polynomial x polynomial: plain convolution
    if (!f.poly_.empty() && !g.poly_.empty()) {
        for (std::size_t i = 0; i < f.poly_.size(); ++i) {
            if (f.poly_[i].is_zero()) continue;
            for (std::size_t j = 0; j < g.poly_.size(); ++j)
                r.add_poly(static_cast<int>(i + j), f.poly_[i] * g.poly_[j]);
        }
    }

    // polynomial x principal part at i: shift the polynomial into the
    // (t - a_i) basis, add exponents, split into poly / principal pieces
    auto poly_times_principal = [&](const std::vector<FieldElement>& poly,
                                    int i, const std::vector<FieldElement>& prin) {
        if (poly.empty()) return;
        const FieldElement& a = cfg->point(i);
        Poly p(spec, poly);
        std::vector<FieldElement> q = p.shifted_coeffs(a);
        std::vector<FieldElement> nonneg;  // accumulated in (t - a_i) powers
        for (std::size_t s = 0; s < q.size(); ++s) {
            if (q[s].is_zero()) continue;
            for (std::size_t l = 0; l < prin.size(); ++l) {
                if (prin[l].is_zero()) continue;
                int e = static_cast<int>(s) - static_cast<int>(l) - 1;
                FieldElement c = q[s] * prin[l];
                if (e >= 0) {
                    if (static_cast<int>(nonneg.size()) <= e)
                        nonneg.resize(e + 1, FieldElement::zero(spec));
                    nonneg[e] += c;
                } else {
                    r.add_principal(i, -e, c);
                }
            }
        }
        if (!nonneg.empty()) {
            Poly back = Poly::from_shifted(spec, nonneg, a);
            for (int k = 0; k <= back.degree(); ++k) r.add_poly(k, back.coeff(k));
        }
    };
    for (const auto& [i, v] : g.principal_) poly_times_principal(f.poly_, i, v);
    for (const auto& [i, v] : f.principal_) poly_times_principal(g.poly_, i, v);

    // principal x principal
    for (const auto& [i, vi] : f.principal_) {
        for (const auto& [j, vj] : g.principal_) {
            if (i == j) {
                for (std::size_t k = 0; k < vi.size(); ++k) {
                    if (vi[k].is_zero()) continue;
                    for (std::size_t l = 0; l < vj.size(); ++l)
                        if (!vj[l].is_zero())
                            r.add_principal(i, static_cast<int>(k + l) + 2, vi[k] * vj[l]);
                }
                continue;
            }
            // cross poles: (t-c)^{-k}(t-b)^{-l} =
            //   sum_m binom(-l, k-m)(c-b)^{m-l-k}(t-c)^{-m}
            // + sum_m binom(-k, l-m)(b-c)^{m-k-l}(t-b)^{-m}
            const FieldElement& ai = cfg->point(i);
            const FieldElement& aj = cfg->point(j);
            for (std::size_t ki = 0; ki < vi.size(); ++ki) {
                if (vi[ki].is_zero()) continue;
                const int k = static_cast<int>(ki) + 1;
                for (std::size_t lj = 0; lj < vj.size(); ++lj) {
                    if (vj[lj].is_zero()) continue;
                    const int l = static_cast<int>(lj) + 1;
                    FieldElement c = vi[ki] * vj[lj];
                    for (int m = 1; m <= k; ++m) {
                        Integer b = binomial_general(Integer(-l), k - m);
                        if (b == 0) continue;
                        FieldElement term = c * FieldElement::from_integer(spec, b) *
                                            (ai - aj).pow(m - l - k);
                        r.add_principal(i, m, term);
                    }
                    for (int m = 1; m <= l; ++m) {
                        Integer b = binomial_general(Integer(-k), l - m);
                        if (b == 0) continue;
                        FieldElement term = c * FieldElement::from_integer(spec, b) *
                                            (aj - ai).pow(m - k - l);
                        r.add_principal(j, m, term);
                    }
                }
            }
        }
    }

    r.trim();
    return r;
}

RatFunc RatFunc::derivative() const {
    RatFunc r(config_);
    for (std::size_t k = 1; k < poly_.size(); ++k)
        r.add_poly(static_cast<int>(k) - 1,
                   poly_[k] * FieldElement::from_integer(field_spec(), static_cast<long>(k)));
    for (const auto& [i, v] : principal_)
        for (std::size_t l = 0; l < v.size(); ++l)
            r.add_principal(i, static_cast<int>(l) + 2,
                            v[l] * FieldElement::from_integer(field_spec(),
                                                              -(static_cast<long>(l) + 1)));
    r.trim();
    return r;
}

FieldElement RatFunc::eval(const FieldElement& p) const {
    for (const auto& [i, v] : principal_)
        if (p == config_->point(i))
            throw PoleEvaluation("evaluation at a pole of the function");
    FieldElement r = Poly(field_spec(), poly_).eval(p);
    for (const auto& [i, v] : principal_) {
        FieldElement inv = (p - config_->point(i)).inv();
        FieldElement power = inv;
        for (std::size_t l = 0; l < v.size(); ++l) {
            r += v[l] * power;
            power *= inv;
        }
    }
    return r;
}

PolyFraction RatFunc::to_polyfraction() const {
    const auto& spec = field_spec();
    const int n = config_->n();
    std::vector<int> orders(n, 0);
    for (const auto& [i, v] : principal_) orders[i] = static_cast<int>(v.size());

    Poly den = Poly::constant(FieldElement::one(spec));
    for (int i = 0; i < n; ++i)
        den = den * Poly::linear(config_->point(i)).pow(orders[i]);

    Poly num = Poly(spec, poly_) * den;
    for (const auto& [i, v] : principal_) {
        Poly rest = Poly::constant(FieldElement::one(spec));
        for (int j = 0; j < n; ++j)
            if (j != i) rest = rest * Poly::linear(config_->point(j)).pow(orders[j]);
        Poly lin = Poly::linear(config_->point(i));
        for (std::size_t l = 0; l < v.size(); ++l) {
            if (v[l].is_zero()) continue;
            num = num + (rest * lin.pow(orders[i] - static_cast<int>(l) - 1)).scaled(v[l]);
        }
    }
    return PolyFraction{num, orders};
}

RatFunc RatFunc::from_polyfraction(const PointConfigPtr& config, const PolyFraction& pf) {
    const int n = config->n();
    if (static_cast<int>(pf.pole_orders.size()) != n)
        throw ForeignPole("pole_orders length does not match the point configuration");
    for (int k : pf.pole_orders)
        if (k < 0) throw ForeignPole("negative pole order");

    RatFunc r(config);
    std::vector<int> orders = pf.pole_orders;
    Poly num = pf.numerator;
    for (int i = 0; i < n; ++i) {
        const FieldElement& a = config->point(i);
        Poly lin = Poly::linear(a);
        while (orders[i] > 0) {
            // residue-style extraction of the deepest coefficient at a_i
            FieldElement rest = FieldElement::one(config->field_spec());
            for (int j = 0; j < n; ++j)
                if (j != i) rest *= (a - config->point(j)).pow(orders[j]);
            FieldElement top = num.eval(a) / rest;
            r.add_principal(i, orders[i], top);
            if (!top.is_zero()) {
                Poly rest_poly = Poly::constant(FieldElement::one(config->field_spec()));
                for (int j = 0; j < n; ++j)
                    if (j != i) rest_poly = rest_poly * Poly::linear(config->point(j)).pow(orders[j]);
                num = num - rest_poly.scaled(top);
            }
            num = Poly::div_exact(num, lin);
            --orders[i];
        }
    }
    for (int k = 0; k <= num.degree(); ++k) r.add_poly(k, num.coeff(k));
    r.trim();
    return r;
}

std::optional<std::pair<FieldElement, std::vector<int>>> RatFunc::unit_factor() const {
    if (is_zero()) return std::nullopt;
    PolyFraction pf = to_polyfraction();
    const int n = config_->n();
    std::vector<int> exps(n);
    for (int i = 0; i < n; ++i) exps[i] = -pf.pole_orders[i];
    Poly num = pf.numerator;
    for (int i = 0; i < n; ++i) {
        const FieldElement& a = config_->point(i);
        Poly lin = Poly::linear(a);
        while (num.eval(a).is_zero()) {
            num = Poly::div_exact(num, lin);
            ++exps[i];
        }
    }
    if (num.degree() != 0) return std::nullopt;
    return std::make_pair(num.coeff(0), exps);
}

std::string RatFunc::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << "+";
        first = false;
    };
    for (std::size_t k = 0; k < poly_.size(); ++k) {
        if (poly_[k].is_zero()) continue;
        sep();
        out << "(" << poly_[k].str() << ")";
        if (k == 1) out << "*t";
        else if (k > 1) out << "*t^" << k;
    }
    for (const auto& [i, v] : principal_) {
        for (std::size_t l = 0; l < v.size(); ++l) {
            if (v[l].is_zero()) continue;
            sep();
            out << "(" << v[l].str() << ")*(t-(" << config_->point(i).str() << "))^-"
                << (l + 1);
        }
    }
    return out.str();
}

}  // namespace npv
