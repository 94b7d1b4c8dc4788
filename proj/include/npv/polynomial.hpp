#ifndef NPV_POLYNOMIAL_HPP
#define NPV_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "npv/field.hpp"

namespace npv {

/// Dense univariate polynomial over a number field, low-degree first.
/// Used for the numerator/denominator form of rational functions, for
/// Taylor shifts between the t and (t - a_i) bases, and by the parser.
class Poly {
public:
    explicit Poly(FieldSpecPtr spec) : spec_(std::move(spec)) {}
    Poly(FieldSpecPtr spec, std::vector<FieldElement> coeffs);

    static Poly zero(const FieldSpecPtr& spec) { return Poly(spec); }
    static Poly constant(const FieldElement& c);
    // t - a
    static Poly linear(const FieldElement& a);
    // t^k
    static Poly monomial(const FieldSpecPtr& spec, int k);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
    bool is_zero() const { return coeffs_.empty(); }
    const FieldElement& leading() const { return coeffs_.back(); }
    FieldElement coeff(int k) const;

    FieldElement eval(const FieldElement& p) const;
    Poly derivative() const;
    Poly pow(int e) const;

    // Coefficients of the same polynomial written in powers of (t - a).
    std::vector<FieldElement> shifted_coeffs(const FieldElement& a) const;
    // Inverse of shifted_coeffs: sum c_s (t - a)^s back to the t basis.
    static Poly from_shifted(const FieldSpecPtr& spec,
                             const std::vector<FieldElement>& c,
                             const FieldElement& a);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const FieldElement& c) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Division with remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    // Exact division; throws DivisionByZero on zero divisor,
    // std::logic_error if the remainder is nonzero.
    static Poly div_exact(const Poly& a, const Poly& b);
    // Monic gcd.
    static Poly gcd(Poly a, Poly b);

private:
    void trim();

    FieldSpecPtr spec_;
    std::vector<FieldElement> coeffs_;
};

}  // namespace npv

#endif
