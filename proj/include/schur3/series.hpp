#ifndef SCHUR3_SERIES_HPP
#define SCHUR3_SERIES_HPP

#include <vector>

#include "schur3/laurent.hpp"
#include "schur3/rational.hpp"

namespace schur3 {

// Power series in a formal variable U truncated at a fixed order:
// coefficients of U^0 .. U^order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(order + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const { return coeffs_.at(k); }
    Rational& operator[](int k) { return coeffs_.at(k); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries& operator*=(const TruncatedSeries& other) {
        *this = *this * other;
        return *this;
    }

    // Multiplicative inverse; constant term must be nonzero.
    TruncatedSeries reciprocal() const;

    bool operator==(const TruncatedSeries& other) const = default;

private:
    std::vector<Rational> coeffs_;
};

// exp(b U) up to U^order.
TruncatedSeries exp_series(const Rational& b, int order);

// rU / (1 - exp(-rU)) up to U^order, computed by exact series inversion.
// Coefficient of U^k is B+_k r^k / k! with the B+_1 = +1/2 convention.
TruncatedSeries todd_factor_series(long r, int order);

// Coefficient of U^M in exp(bU) * prod_i r_i U / (1 - exp(-r_i U)),
// where M = |r|.  All r entries must be nonzero.
Rational rr_eval(long b, const std::vector<long>& r);

// The RR polynomial expanded in M+1 formal variables b, r_1 .. r_M
// (variable 0 is b); homogeneous of degree M and symmetric in the r_i.
LaurentPolynomial rr_symbolic(int M);

}  // namespace schur3

#endif
