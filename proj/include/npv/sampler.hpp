#ifndef NPV_SAMPLER_HPP
#define NPV_SAMPLER_HPP

#include <cstdint>
#include <random>

#include "npv/liealg.hpp"
#include "npv/rfunc.hpp"

namespace npv {

/// Seeded source of small exact values for the property-fuzz suites.
/// Values are derived from raw mt19937_64 output (never from distribution
/// classes), so identical seeds give identical streams on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    // Uniform in [lo, hi], inclusive.
    long int_in(long lo, long hi);
    // Numerator in [-9, 9], denominator in [1, 9].
    Rational small_rational();
    // Nonzero variant of small_rational.
    Rational small_nonzero_rational();
    FieldElement field_element(const FieldSpecPtr& spec);
    FieldElement nonzero_field_element(const FieldSpecPtr& spec);
    // Basis-sparse element: at most max_terms terms, exponents in [-5, 5].
    RatFunc ratfunc(const PointConfigPtr& config, int max_terms = 6);
    RatFunc nonzero_ratfunc(const PointConfigPtr& config, int max_terms = 6);
    Derivation derivation(const PointConfigPtr& config, int max_terms = 6);

private:
    std::mt19937_64 rng_;
};

}  // namespace npv

#endif
