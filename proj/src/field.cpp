#include "npv/field.hpp"

#include <sstream>
#include <stdexcept>

#include "npv/errors.hpp"

namespace npv {

namespace {

using QPoly = std::vector<Rational>;  // dense, low to high

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// a mod b, b nonzero.
QPoly rem(QPoly a, const QPoly& b) {
    trim(a);
    const Rational lead = b.back();
    while (deg(a) >= deg(b)) {
        Rational f = a.back() / lead;
        int shift = deg(a) - deg(b);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= f * b[i];
        trim(a);
    }
    return a;
}

// Extended Euclid over Q[x]: returns (g, u) with u*a = g (mod b),
// g the monic gcd of a and b.
std::pair<QPoly, QPoly> half_xgcd(QPoly a, QPoly b) {
    QPoly u0{Rational(1)};
    QPoly u1{};
    trim(a);
    trim(b);
    while (!b.empty()) {
        // quotient of a by b
        QPoly q;
        QPoly r = a;
        const Rational lead = b.back();
        while (deg(r) >= deg(b)) {
            Rational f = r.back() / lead;
            int shift = deg(r) - deg(b);
            if (deg(q) < shift) q.resize(shift + 1, Rational(0));
            q[shift] += f;
            for (std::size_t i = 0; i < b.size(); ++i)
                r[i + shift] -= f * b[i];
            trim(r);
        }
        QPoly u2 = sub(u0, mul(q, u1));
        a = b;
        b = r;
        u0 = u1;
        u1 = u2;
    }
    // make gcd monic
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
        for (auto& c : u0) c /= lead;
    }
    return {a, u0};
}

}  // namespace

FieldSpec::FieldSpec(std::vector<Rational> modulus) : modulus_(std::move(modulus)) {
    if (modulus_.size() < 2)
        throw std::invalid_argument("field modulus must have degree >= 1");
    if (modulus_.back() != 1)
        throw std::invalid_argument("field modulus must be monic");
}

FieldSpecPtr FieldSpec::rationals() {
    static FieldSpecPtr q =
        std::make_shared<FieldSpec>(std::vector<Rational>{Rational(0), Rational(1)});
    return q;
}

FieldSpecPtr FieldSpec::make(std::vector<Rational> modulus) {
    return std::make_shared<FieldSpec>(std::move(modulus));
}

FieldElement::FieldElement(FieldSpecPtr spec, const Rational& value)
    : spec_(std::move(spec)), coeffs_(spec_->degree(), Rational(0)) {
    coeffs_[0] = value;
}

FieldElement::FieldElement(FieldSpecPtr spec, std::vector<Rational> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    const auto d = static_cast<std::size_t>(spec_->degree());
    if (coeffs_.size() > d)
        throw std::invalid_argument("coefficient vector longer than field degree");
    coeffs_.resize(d, Rational(0));
}

FieldElement FieldElement::zero(const FieldSpecPtr& spec) {
    return FieldElement(spec, Rational(0));
}

FieldElement FieldElement::one(const FieldSpecPtr& spec) {
    return FieldElement(spec, Rational(1));
}

FieldElement FieldElement::generator(const FieldSpecPtr& spec) {
    if (spec->degree() == 1) {
        // m(x) = x - c: the generator is the rational root c itself.
        return FieldElement(spec, -spec->modulus()[0]);
    }
    std::vector<Rational> c(spec->degree(), Rational(0));
    c[1] = 1;
    return FieldElement(spec, std::move(c));
}

FieldElement FieldElement::from_integer(const FieldSpecPtr& spec, long v) {
    return FieldElement(spec, Rational(v));
}

FieldElement FieldElement::from_integer(const FieldSpecPtr& spec, const Integer& v) {
    return FieldElement(spec, Rational(v));
}

void FieldElement::check_same_spec(const FieldElement& other) const {
    if (!spec_ || !other.spec_ || !(*spec_ == *other.spec_))
        throw SpecMismatch("field elements from different field specs");
}

bool FieldElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool FieldElement::is_rational_integer() const {
    return is_rational() && is_integer(coeffs_[0]);
}

Rational FieldElement::rational_value() const { return coeffs_[0]; }

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& v) {
    check_same_spec(v);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += v.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& v) {
    check_same_spec(v);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= v.coeffs_[i];
    return *this;
}

FieldElement operator+(const FieldElement& u, const FieldElement& v) {
    FieldElement r = u;
    r += v;
    return r;
}

FieldElement operator-(const FieldElement& u, const FieldElement& v) {
    FieldElement r = u;
    r -= v;
    return r;
}

FieldElement operator*(const FieldElement& u, const FieldElement& v) {
    u.check_same_spec(v);
    const int d = u.spec()->degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (u.coeffs_[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            prod[i + j] += u.coeffs_[i] * v.coeffs_[j];
    }
    // reduce modulo the monic modulus
    const auto& m = u.spec()->modulus();
    for (int k = 2 * d - 2; k >= d; --k) {
        if (prod[k] == 0) continue;
        Rational f = prod[k];
        prod[k] = 0;
        for (int i = 0; i < d; ++i) prod[k - d + i] -= f * m[i];
    }
    prod.resize(d);
    return FieldElement(u.spec_, std::move(prod));
}

FieldElement& FieldElement::operator*=(const FieldElement& v) {
    *this = *this * v;
    return *this;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    auto [g, u] = half_xgcd(coeffs_, spec_->modulus());
    if (static_cast<int>(g.size()) - 1 != 0)
        throw ReducibleModulus("field modulus is reducible: gcd with element has degree " +
                               std::to_string(g.size() - 1));
    QPoly r = rem(u, spec_->modulus());
    r.resize(spec_->degree(), Rational(0));
    return FieldElement(spec_, std::move(r));
}

FieldElement operator/(const FieldElement& u, const FieldElement& v) {
    return u * v.inv();
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElement base = *this;
    FieldElement r = FieldElement::one(spec_);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool operator==(const FieldElement& u, const FieldElement& v) {
    u.check_same_spec(v);
    return u.coeffs_ == v.coeffs_;
}

std::string FieldElement::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? "-" : "+");
            if (c < 0) c = -c;
        }
        first = false;
        bool coeff_shown = false;
        if (c != 1 || i == 0) {
            if (is_integer(c))
                out << c.get_num().get_str();
            else
                out << c.get_num().get_str() << "/" << c.get_den().get_str();
            coeff_shown = true;
        }
        if (i >= 1) {
            if (coeff_shown) out << "*";
            out << "s";
            if (i >= 2) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ForeignPole: return "ForeignPole";
        case ErrorCode::ConfigMismatch: return "ConfigMismatch";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::UnexpectedGroup: return "UnexpectedGroup";
        case ErrorCode::InfiniteGroup: return "InfiniteGroup";
        case ErrorCode::SpecMismatch: return "SpecMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::PoleEvaluation: return "PoleEvaluation";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::NotApplicable: return "NotApplicable";
    }
    return "Error";
}

}  // namespace npv
