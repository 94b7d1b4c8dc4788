#ifndef NPV_DENSMOD_HPP
#define NPV_DENSMOD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "npv/liealg.hpp"
#include "npv/rfunc.hpp"

namespace npv {

class DensityParams;
using DensityParamsPtr = std::shared_ptr<const DensityParams>;

/// Parameters (alpha, beta) of the module of densities V(alpha, beta) = R_a z.
class DensityParams {
public:
    DensityParams(PointConfigPtr config, std::vector<FieldElement> alpha, FieldElement beta);

    const PointConfigPtr& config() const { return config_; }
    const std::vector<FieldElement>& alpha() const { return alpha_; }
    const FieldElement& alpha(int i) const { return alpha_.at(i); }
    const FieldElement& beta() const { return beta_; }
    int n() const { return config_->n(); }

    bool alpha_integral() const;  // every alpha_i a rational integer

    static DensityParamsPtr make(PointConfigPtr config, std::vector<FieldElement> alpha,
                                 FieldElement beta);

    friend bool operator==(const DensityParams& a, const DensityParams& b) {
        return *a.config_ == *b.config_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }

private:
    PointConfigPtr config_;
    std::vector<FieldElement> alpha_;
    FieldElement beta_;
};

/// Element gz of V(alpha, beta).
struct DensityElement {
    DensityParamsPtr params;
    RatFunc g;

    bool is_zero() const { return g.is_zero(); }
    friend bool operator==(const DensityElement& x, const DensityElement& y) {
        return *x.params == *y.params && x.g == y.g;
    }
    friend bool operator!=(const DensityElement& x, const DensityElement& y) {
        return !(x == y);
    }
    friend DensityElement operator+(const DensityElement& x, const DensityElement& y) {
        return {x.params, x.g + y.g};
    }
    friend DensityElement operator-(const DensityElement& x, const DensityElement& y) {
        return {x.params, x.g - y.g};
    }
    DensityElement scaled(const FieldElement& c) const { return {params, g.scaled(c)}; }
};

// sum of alpha_j (t - a_j)^{-1}
RatFunc sigma(const DensityParams& params);

// (f d) . (g z) = (f g' + f g sigma + beta f' g) z
DensityElement act(const Derivation& x, const DensityElement& v);

struct IrreducibilityReport {
    bool irreducible = true;
    std::string reason;  // tag, empty when irreducible
};

IrreducibilityReport is_irreducible(const DensityParams& params);

// The one-dimensional submodule generator u z, u = prod (t - a_i)^{-alpha_i}.
// Requires beta = 0 and integral alpha; otherwise NotApplicable.
DensityElement trivial_submodule_generator(const DensityParamsPtr& params);

// (g' + g sigma) z, the image of gz under the twisted derivative.
DensityElement partial_image(const DensityParamsPtr& params, const RatFunc& g);

// Decides v in partial_image and returns a witness g with (g' + g sigma) = v.
// Exact for integral alpha (residue criterion); otherwise a bounded linear
// solve whose search space is widened by degree_slack.
std::optional<RatFunc> in_partial_image(const DensityParams& params, const RatFunc& v,
                                        int degree_slack);

// The intertwiner gz |-> (g' + g sigma) z from V(alpha, 0) into V(alpha, 1);
// an isomorphism onto its image when alpha is not integral (else NotApplicable).
DensityElement theorem51d_iso(const DensityParamsPtr& params0, const RatFunc& g);

// prod (t - a_i)^{e_i} for integer exponents of either sign, as a RatFunc.
RatFunc marked_power_product(const PointConfigPtr& config, const std::vector<long>& exps);

}  // namespace npv

#endif
