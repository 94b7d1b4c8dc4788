#include "npv/rational.hpp"

#include <stdexcept>

namespace npv {

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

Integer binomial_general(const Integer& p, long q) {
    if (q < 0) return 0;
    Integer num = 1;
    Integer den = 1;
    for (long j = 0; j < q; ++j) {
        num *= p - j;
        den *= j + 1;
    }
    return num / den;  // falling factorial product is always divisible by q!
}

Integer factorial(long n) {
    Integer r = 1;
    for (long j = 2; j <= n; ++j) r *= j;
    return r;
}

}  // namespace npv
