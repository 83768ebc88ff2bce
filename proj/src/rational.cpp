#include "schur3/rational.hpp"

namespace schur3 {

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e > 0) return Rational(0);
        throw std::domain_error("pow_rational: zero base with negative exponent");
    }
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
    return e > 0 ? rat(num, den) : rat(den, num);
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational q(s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

}  // namespace schur3
