#include "npv/sampler.hpp"

namespace npv {

long Sampler::int_in(long lo, long hi) {
    // Modulo bias is irrelevant here: ranges are tiny and only reproducibility
    // matters, not uniformity to the last ulp.
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::small_rational() {
    return make_rational(int_in(-9, 9), int_in(1, 9));
}

Rational Sampler::small_nonzero_rational() {
    for (;;) {
        Rational q = small_rational();
        if (q != 0) return q;
    }
}

FieldElement Sampler::field_element(const FieldSpecPtr& spec) {
    std::vector<Rational> c(spec->degree());
    for (auto& x : c) x = small_rational();
    return FieldElement(spec, std::move(c));
}

FieldElement Sampler::nonzero_field_element(const FieldSpecPtr& spec) {
    for (;;) {
        FieldElement x = field_element(spec);
        if (!x.is_zero()) return x;
    }
}

RatFunc Sampler::ratfunc(const PointConfigPtr& config, int max_terms) {
    const auto& spec = config->field_spec();
    const int n = config->n();
    std::vector<std::pair<BasisTag, FieldElement>> terms;
    const long count = int_in(0, max_terms);
    for (long i = 0; i < count; ++i) {
        long e = int_in(-5, 5);
        BasisTag tag;
        if (e < 0) {
            tag.is_pole = true;
            tag.pole = static_cast<int>(int_in(0, n - 1));
            tag.exp = static_cast<int>(-e);
        } else {
            tag.exp = static_cast<int>(e);
        }
        terms.emplace_back(tag, field_element(spec));
    }
    return RatFunc::from_basis(config, terms);
}

RatFunc Sampler::nonzero_ratfunc(const PointConfigPtr& config, int max_terms) {
    for (;;) {
        RatFunc f = ratfunc(config, max_terms);
        if (!f.is_zero()) return f;
    }
}

Derivation Sampler::derivation(const PointConfigPtr& config, int max_terms) {
    return {ratfunc(config, max_terms)};
}

}  // namespace npv
