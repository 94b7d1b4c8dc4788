#ifndef NPV_RFUNC_HPP
#define NPV_RFUNC_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "npv/polynomial.hpp"

namespace npv {

class PointConfig;
using PointConfigPtr = std::shared_ptr<const PointConfig>;

/// The marked points a_1..a_n. Pairwise distinctness is enforced here,
/// not at operation time.
class PointConfig {
public:
    PointConfig(FieldSpecPtr spec, std::vector<FieldElement> points);

    int n() const { return static_cast<int>(points_.size()); }
    const FieldSpecPtr& field_spec() const { return spec_; }
    const std::vector<FieldElement>& points() const { return points_; }
    // 0-based
    const FieldElement& point(int i) const { return points_.at(i); }
    // -1 if p is not a marked point
    int index_of(const FieldElement& p) const;

    static PointConfigPtr make(FieldSpecPtr spec, std::vector<FieldElement> points);

    friend bool operator==(const PointConfig& a, const PointConfig& b) {
        return *a.spec_ == *b.spec_ && a.points_ == b.points_;
    }

private:
    FieldSpecPtr spec_;
    std::vector<FieldElement> points_;
};

/// Basis tag: either t^k (k >= 0) or (t - a_i)^{-l} (0-based pole index i, l >= 1).
struct BasisTag {
    bool is_pole = false;
    int pole = 0;  // 0-based, valid when is_pole
    int exp = 0;   // k for t^k; l for (t - a_i)^{-l}
};

/// Numerator / prod (t - a_i)^{k_i} form. Secondary representation used as
/// the multiplication oracle and for unit detection.
struct PolyFraction {
    Poly numerator;
    std::vector<int> pole_orders;  // length n, entries >= 0
};

/// Element of R_a in partial-fraction canonical form: a dense polynomial part
/// plus sparse principal parts at each marked point. Immutable in practice;
/// all operations return new values.
class RatFunc {
public:
    explicit RatFunc(PointConfigPtr config);

    static RatFunc zero(const PointConfigPtr& config);
    static RatFunc one(const PointConfigPtr& config);
    static RatFunc constant(const PointConfigPtr& config, const FieldElement& c);
    // t^k, k >= 0
    static RatFunc t_power(const PointConfigPtr& config, int k);
    // (t - a_i)^{-l}, 0-based i, l >= 1; BadIndex on a bad pole index
    static RatFunc pole_power(const PointConfigPtr& config, int i, int l);
    static RatFunc from_basis(const PointConfigPtr& config,
                              const std::vector<std::pair<BasisTag, FieldElement>>& terms);
    static RatFunc from_poly(const PointConfigPtr& config, const Poly& p);
    static RatFunc from_polyfraction(const PointConfigPtr& config, const PolyFraction& pf);

    const PointConfigPtr& config() const { return config_; }
    const FieldSpecPtr& field_spec() const { return config_->field_spec(); }

    bool is_zero() const;
    // Degree of the polynomial part, -1 if absent.
    int poly_degree() const { return static_cast<int>(poly_.size()) - 1; }
    // Pole order at marked point i (0 if no principal part there).
    int pole_order(int i) const;
    FieldElement poly_coeff(int k) const;
    // Coefficient of (t - a_i)^{-l}.
    FieldElement principal_coeff(int i, int l) const;
    // All nonzero basis terms, polynomial part first, then poles by (index, order).
    std::vector<std::pair<BasisTag, FieldElement>> terms() const;

    RatFunc operator-() const;
    RatFunc scaled(const FieldElement& c) const;
    friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
    friend bool operator==(const RatFunc& f, const RatFunc& g);
    friend bool operator!=(const RatFunc& f, const RatFunc& g) { return !(f == g); }

    RatFunc derivative() const;
    FieldElement eval(const FieldElement& p) const;

    PolyFraction to_polyfraction() const;
    // Some(c, exponents) iff *this = c * prod (t - a_i)^{k_i} with c != 0.
    std::optional<std::pair<FieldElement, std::vector<int>>> unit_factor() const;

    // Parseable textual form (grammar of the expression parser).
    std::string str() const;

private:
    void add_principal(int i, int l, const FieldElement& c);
    void add_poly(int k, const FieldElement& c);
    void trim();
    void check_same_config(const RatFunc& g) const;

    PointConfigPtr config_;
    std::vector<FieldElement> poly_;                 // dense, index = power of t
    std::map<int, std::vector<FieldElement>> principal_;  // i -> coeffs, index l-1
};

}  // namespace npv

#endif
