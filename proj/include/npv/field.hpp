#ifndef NPV_FIELD_HPP
#define NPV_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "npv/rational.hpp"

namespace npv {

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// A simple extension Q(theta) = Q[x]/(m(x)) with m monic of degree d >= 1.
/// Degree 1 encodes plain Q. Irreducibility of m is not checked up front;
/// a reducible modulus surfaces as ReducibleModulus during inversion.
class FieldSpec {
public:
    // modulus: coefficients of m(x), low to high, length d + 1, leading 1.
    explicit FieldSpec(std::vector<Rational> modulus);

    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const std::vector<Rational>& modulus() const { return modulus_; }

    static FieldSpecPtr rationals();
    static FieldSpecPtr make(std::vector<Rational> modulus);

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.modulus_ == b.modulus_;
    }

private:
    std::vector<Rational> modulus_;
};

/// Element of Q(theta): a polynomial in theta of degree < d, stored densely.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldSpecPtr spec, const Rational& value);
    // coeffs low to high; padded/asserted to length d.
    FieldElement(FieldSpecPtr spec, std::vector<Rational> coeffs);

    static FieldElement zero(const FieldSpecPtr& spec);
    static FieldElement one(const FieldSpecPtr& spec);
    static FieldElement generator(const FieldSpecPtr& spec);
    static FieldElement from_integer(const FieldSpecPtr& spec, long v);
    static FieldElement from_integer(const FieldSpecPtr& spec, const Integer& v);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    bool is_rational_integer() const;
    // Valid only when is_rational().
    Rational rational_value() const;

    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(long e) const;

    friend FieldElement operator+(const FieldElement& u, const FieldElement& v);
    friend FieldElement operator-(const FieldElement& u, const FieldElement& v);
    friend FieldElement operator*(const FieldElement& u, const FieldElement& v);
    friend FieldElement operator/(const FieldElement& u, const FieldElement& v);
    friend bool operator==(const FieldElement& u, const FieldElement& v);
    friend bool operator!=(const FieldElement& u, const FieldElement& v) {
        return !(u == v);
    }

    FieldElement& operator+=(const FieldElement& v);
    FieldElement& operator-=(const FieldElement& v);
    FieldElement& operator*=(const FieldElement& v);

    // Printed as an expression in the generator symbol `s`, parseable by the
    // expression grammar, e.g. "(1/2+3*s^2)".
    std::string str() const;

private:
    void check_same_spec(const FieldElement& other) const;

    FieldSpecPtr spec_;
    std::vector<Rational> coeffs_;
};

}  // namespace npv

#endif
