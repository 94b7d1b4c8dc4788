#include "npv/polynomial.hpp"

#include <stdexcept>

#include "npv/errors.hpp"

namespace npv {

Poly::Poly(FieldSpecPtr spec, std::vector<FieldElement> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const FieldElement& c) {
    return Poly(c.spec(), {c});
}

Poly Poly::linear(const FieldElement& a) {
    return Poly(a.spec(), {-a, FieldElement::one(a.spec())});
}

Poly Poly::monomial(const FieldSpecPtr& spec, int k) {
    std::vector<FieldElement> c(k + 1, FieldElement::zero(spec));
    c.back() = FieldElement::one(spec);
    return Poly(spec, std::move(c));
}

FieldElement Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return FieldElement::zero(spec_);
    return coeffs_[k];
}

FieldElement Poly::eval(const FieldElement& p) const {
    FieldElement r = FieldElement::zero(spec_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * p + *it;
    return r;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(spec_);
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        c.push_back(coeffs_[k] * FieldElement::from_integer(spec_, static_cast<long>(k)));
    return Poly(spec_, std::move(c));
}

Poly Poly::pow(int e) const {
    Poly r = Poly::constant(FieldElement::one(spec_));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::vector<FieldElement> Poly::shifted_coeffs(const FieldElement& a) const {
    // repeated synthetic division by (t - a)
    std::vector<FieldElement> work = coeffs_;
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    while (!work.empty()) {
        const std::size_t m = work.size() - 1;
        if (m == 0) {
            out.push_back(work[0]);
            break;
        }
        std::vector<FieldElement> q(m, FieldElement::zero(spec_));
        q[m - 1] = work[m];
        for (std::size_t i = m - 1; i >= 1; --i) q[i - 1] = work[i] + a * q[i];
        out.push_back(work[0] + a * q[0]);
        work = std::move(q);
    }
    return out;
}

Poly Poly::from_shifted(const FieldSpecPtr& spec,
                        const std::vector<FieldElement>& c,
                        const FieldElement& a) {
    Poly r(spec);
    Poly base = Poly::constant(FieldElement::one(spec));
    Poly lin = Poly::linear(a);
    for (std::size_t s = 0; s < c.size(); ++s) {
        if (!c[s].is_zero()) r = r + base.scaled(c[s]);
        if (s + 1 < c.size()) base = base * lin;
    }
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<FieldElement> c = a.coeffs_;
    if (c.size() < b.coeffs_.size())
        c.resize(b.coeffs_.size(), FieldElement::zero(a.spec_));
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(a.spec_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    std::vector<FieldElement> c = coeffs_;
    for (auto& x : c) x = -x;
    return Poly(spec_, std::move(c));
}

Poly Poly::scaled(const FieldElement& c) const {
    if (c.is_zero()) return Poly(spec_);
    std::vector<FieldElement> out = coeffs_;
    for (auto& x : out) x *= c;
    return Poly(spec_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.spec_);
    std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                                FieldElement::zero(a.spec_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.spec_, std::move(c));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q(a.spec_);
    Poly r = a;
    FieldElement lead_inv = b.leading().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        FieldElement f = r.leading() * lead_inv;
        int shift = r.degree() - b.degree();
        std::vector<FieldElement> qc(shift + 1, FieldElement::zero(a.spec_));
        qc.back() = f;
        Poly term(a.spec_, std::move(qc));
        q = q + term;
        r = r - term * b;
    }
    return {q, r};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a.scaled(a.leading().inv());
    return a;
}

}  // namespace npv
