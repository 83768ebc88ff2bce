#ifndef SCHUR3_LAURENT_HPP
#define SCHUR3_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "schur3/rational.hpp"

namespace schur3 {

// Integer exponent vector; entries may be negative.
using Exponents = std::vector<int>;

class NotDivisibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Terms are keyed by exponent vector (lex order via std::map); zero
// coefficients are never stored.
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(int var_count);

    static LaurentPolynomial monomial(Exponents exps, Rational coeff = Rational(1));
    static LaurentPolynomial constant(int var_count, Rational value);
    static LaurentPolynomial one(int var_count) { return constant(var_count, Rational(1)); }

    int var_count() const { return var_count_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    // Accumulates coeff onto the term x^exps, dropping it if the result is zero.
    void add_term(const Exponents& exps, const Rational& coeff);

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial operator-() const;

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a -= b;
        return a;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    bool operator==(const LaurentPolynomial& other) const = default;

    // Multiplication by the monomial coeff * x^delta.
    LaurentPolynomial shifted(const Exponents& delta, const Rational& coeff = Rational(1)) const;

    // Point evaluation; every coordinate must be nonzero (negative exponents).
    Rational evaluate(const std::vector<Rational>& point) const;

    // Substitutes x_c -> q^{weights[c]}, producing a univariate Laurent
    // polynomial in q.
    LaurentPolynomial specialize(const std::vector<int>& weights) const;

    // Total degree of every term if the polynomial is homogeneous.
    bool is_homogeneous(long* degree_out = nullptr) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    void check_arity(const LaurentPolynomial& other) const;

    int var_count_;
    std::map<Exponents, Rational> terms_;
};

// Exact quotient q with q * den == num; throws NotDivisibleError otherwise.
LaurentPolynomial laurent_divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den);

}  // namespace schur3

#endif
