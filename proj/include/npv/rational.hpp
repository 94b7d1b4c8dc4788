#ifndef NPV_RATIONAL_HPP
#define NPV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace npv {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den >= 1
// as long as values are canonicalized, which all our construction paths do.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

// binom(p, q) for arbitrary integer p and q >= 0, via the falling-factorial
// product; q < 0 gives 0. Covers the negative-upper-index binomials of the
// cross-pole product decomposition and the convention binom(m-1, m) = 0.
Integer binomial_general(const Integer& p, long q);

Integer factorial(long n);

}  // namespace npv

#endif
