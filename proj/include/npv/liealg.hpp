#ifndef NPV_LIEALG_HPP
#define NPV_LIEALG_HPP

#include <vector>

#include "npv/rfunc.hpp"

namespace npv {

/// f * d/dt, an element of the derivation algebra of R_a.
struct Derivation {
    RatFunc coeff;

    const PointConfigPtr& config() const { return coeff.config(); }
    friend bool operator==(const Derivation& x, const Derivation& y) {
        return x.coeff == y.coeff;
    }
    friend bool operator!=(const Derivation& x, const Derivation& y) { return !(x == y); }
    Derivation operator-() const { return {-coeff}; }
    friend Derivation operator+(const Derivation& x, const Derivation& y) {
        return {x.coeff + y.coeff};
    }
    friend Derivation operator-(const Derivation& x, const Derivation& y) {
        return {x.coeff - y.coeff};
    }
    Derivation scaled(const FieldElement& c) const { return {coeff.scaled(c)}; }
};

/// Element of the centrally extended algebra: derivation plus coordinates
/// along the n central generators c_1..c_n.
struct ExtElement {
    Derivation deriv;
    std::vector<FieldElement> central;  // length n

    static ExtElement from_derivation(Derivation d);
    static ExtElement central_generator(const PointConfigPtr& config, int i);
    friend bool operator==(const ExtElement& x, const ExtElement& y) {
        return x.deriv == y.deriv && x.central == y.central;
    }
    friend ExtElement operator+(const ExtElement& x, const ExtElement& y);
    friend ExtElement operator-(const ExtElement& x, const ExtElement& y);
};

// (f g' - g f') d/dt
Derivation bracket(const Derivation& x, const Derivation& y);

// Closed form of [(t-a_i)^k d, (t-a_j)^m d] for k >= 0, m arbitrary, i != j.
Derivation bracket_basis_positive(const PointConfigPtr& config, int i, int k, int j, int m);

// Closed form of [(t-a_i)^{-k} d, (t-a_j)^{-l} d] for k, l >= 1, i != j.
Derivation bracket_basis_negative(const PointConfigPtr& config, int i, int k, int j, int l);

// The i-th 2-cocycle (0-based i), extended bilinearly over the canonical basis.
FieldElement cocycle_phi(int i, const Derivation& x, const Derivation& y);

// Sum of all cocycle_phi(i, ., .): vanishes on cross-pole negative pairs.
FieldElement cocycle_separating(const Derivation& x, const Derivation& y);

// Bracket in the central extension; central coordinates of the inputs are inert.
ExtElement ext_bracket(const ExtElement& x, const ExtElement& y);

// Four-sum combinatorial identity behind the cocycle property, checked
// directly from its sums at the given parameters.
bool verify_identity_cor21(const FieldElement& x, const FieldElement& y,
                           const FieldElement& z, int m, int k, int l, int r);

// Two-sum identity from pairing the separating cocycle with a Jacobi triple.
bool verify_identity_cor41(const FieldElement& x, const FieldElement& y,
                           int k, int l, int m);

}  // namespace npv

#endif
