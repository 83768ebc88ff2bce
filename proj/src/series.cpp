#include "schur3/series.hpp"

namespace schur3 {

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    if (order() != other.order()) throw std::invalid_argument("series order mismatch");
    TruncatedSeries p(order());
    for (int i = 0; i <= order(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (other.coeffs_[j] == 0) continue;
            p.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return p;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (coeffs_[0] == 0) throw std::invalid_argument("series inversion with zero constant term");
    TruncatedSeries inv(order());
    inv.coeffs_[0] = Rational(1) / coeffs_[0];
    for (int k = 1; k <= order(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += coeffs_[j] * inv.coeffs_[k - j];
        inv.coeffs_[k] = -acc / coeffs_[0];
    }
    return inv;
}

TruncatedSeries exp_series(const Rational& b, int order) {
    TruncatedSeries s(order);
    s[0] = 1;
    for (int k = 1; k <= order; ++k) s[k] = s[k - 1] * b / k;
    return s;
}

TruncatedSeries todd_factor_series(long r, int order) {
    if (r == 0) throw std::invalid_argument("todd factor undefined at r = 0");
    // (1 - exp(-rU)) / (rU) has U^k coefficient (-r)^k / (k+1)!.
    TruncatedSeries base(order);
    Rational term(1);
    base[0] = term;
    for (int k = 1; k <= order; ++k) {
        term *= rat(-r, k + 1);
        base[k] = term;
    }
    return base.reciprocal();
}

Rational rr_eval(long b, const std::vector<long>& r) {
    const int M = static_cast<int>(r.size());
    TruncatedSeries prod = exp_series(Rational(b), M);
    for (long ri : r) prod *= todd_factor_series(ri, M);
    return prod[M];
}

LaurentPolynomial rr_symbolic(int M) {
    if (M < 0) throw std::invalid_argument("negative RR order");
    if (M > 8) throw std::invalid_argument("rr_symbolic limited to M <= 8");
    const int nv = M + 1;  // variable 0 = b, variables 1..M = r_i

    // Series in U whose coefficients are polynomials in (b, r_1..r_M).
    std::vector<LaurentPolynomial> prod;
    prod.reserve(M + 1);
    {
        // exp(bU): U^k coefficient b^k / k!
        Rational inv_fact(1);
        for (int k = 0; k <= M; ++k) {
            if (k > 0) inv_fact /= k;
            Exponents e(nv, 0);
            e[0] = k;
            prod.push_back(LaurentPolynomial::monomial(e, inv_fact));
        }
    }

    const TruncatedSeries todd_unit = todd_factor_series(1, M);  // B+_k / k!
    for (int i = 1; i <= M; ++i) {
        std::vector<LaurentPolynomial> next(M + 1, LaurentPolynomial(nv));
        for (int a = 0; a <= M; ++a) {
            if (prod[a].is_zero()) continue;
            for (int k = 0; a + k <= M; ++k) {
                if (todd_unit[k] == 0) continue;
                Exponents e(nv, 0);
                e[i] = k;
                next[a + k] += prod[a].shifted(e, todd_unit[k]);
            }
        }
        prod = std::move(next);
    }
    return prod[M];
}

}  // namespace schur3
