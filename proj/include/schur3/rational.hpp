#ifndef SCHUR3_RATIONAL_HPP
#define SCHUR3_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace schur3 {

// All formula arithmetic is exact.  GMP rationals are kept canonical
// (lowest terms, positive denominator) by construction.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// base^e for integer e of either sign; base must be nonzero when e < 0.
Rational pow_rational(const Rational& base, long e);

// "p" or "p/q".
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with optional sign.
Rational parse_rational(std::string_view text);

}  // namespace schur3

#endif
