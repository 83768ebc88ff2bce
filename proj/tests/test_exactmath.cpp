#include <doctest.h>

#include <random>

#include "schur3/laurent.hpp"
#include "schur3/rational.hpp"
#include "schur3/series.hpp"

using namespace schur3;

namespace {

// Independent oracle: Bernoulli numbers by the classical recurrence
// sum_{k=0}^{m} C(m+1,k) B_k = 0, with the B_1 = +1/2 sign convention.
std::vector<Rational> bernoulli_plus_oracle(int order) {
    std::vector<Rational> b{Rational(1)};
    for (int m = 1; m <= order; ++m) {
        Rational acc(0);
        Integer binom = 1;  // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            acc += Rational(binom) * b[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b.push_back(-acc / Rational(m + 1));
    }
    if (order >= 1) b[1] = -b[1];
    return b;
}

LaurentPolynomial random_laurent(std::mt19937_64& rng, int nvars, int max_terms) {
    std::uniform_int_distribution<int> exp_dist(-3, 3);
    std::uniform_int_distribution<int> coeff_dist(-5, 5);
    std::uniform_int_distribution<int> count_dist(1, max_terms);
    LaurentPolynomial p(nvars);
    int terms = count_dist(rng);
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars);
        for (int c = 0; c < nvars; ++c) e[c] = exp_dist(rng);
        p.add_term(e, rat(coeff_dist(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(to_string(rat(3, 6)) == "1/2");
    CHECK(to_string(rat(-4, 2)) == "-2");
    CHECK(parse_rational("7/3") == rat(7, 3));
    CHECK(parse_rational("-5") == rat(-5));
    CHECK(pow_rational(rat(2, 3), 3) == rat(8, 27));
    CHECK(pow_rational(rat(2, 3), -2) == rat(9, 4));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("laurent product of the two root factors") {
    // (1 - x1^-1 x2)(1 - x2^-1 x1) = 2 - x1^-1 x2 - x1 x2^-1
    LaurentPolynomial a = LaurentPolynomial::one(2);
    a.add_term({-1, 1}, rat(-1));
    LaurentPolynomial b = LaurentPolynomial::one(2);
    b.add_term({1, -1}, rat(-1));
    LaurentPolynomial expected = LaurentPolynomial::constant(2, rat(2));
    expected.add_term({-1, 1}, rat(-1));
    expected.add_term({1, -1}, rat(-1));
    CHECK(a * b == expected);
}

TEST_CASE("laurent addition identities") {
    std::mt19937_64 rng(7);
    LaurentPolynomial p = random_laurent(rng, 3, 6);
    CHECK(p + LaurentPolynomial(3) == p);

    LaurentPolynomial one_minus_q = LaurentPolynomial::one(1);
    one_minus_q.add_term({1}, rat(-1));
    LaurentPolynomial one_plus_q = LaurentPolynomial::one(1);
    one_plus_q.add_term({1}, rat(1));
    LaurentPolynomial expected = LaurentPolynomial::one(1);
    expected.add_term({2}, rat(-1));
    CHECK(one_minus_q * one_plus_q == expected);
}

TEST_CASE("laurent arity mismatch is rejected") {
    CHECK_THROWS_AS(LaurentPolynomial::one(2) + LaurentPolynomial::one(3), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPolynomial::one(2) * LaurentPolynomial::one(3), std::invalid_argument);
}

TEST_CASE("exact division recovers geometric factors") {
    LaurentPolynomial num = LaurentPolynomial::one(1);
    num.add_term({2}, rat(-1));  // 1 - q^2
    LaurentPolynomial den = LaurentPolynomial::one(1);
    den.add_term({1}, rat(-1));  // 1 - q
    LaurentPolynomial expected = LaurentPolynomial::one(1);
    expected.add_term({1}, rat(1));  // 1 + q
    CHECK(laurent_divide_exact(num, den) == expected);
}

TEST_CASE("division by itself and by one") {
    LaurentPolynomial e2(3);
    e2.add_term({1, 1, 0}, rat(1));
    e2.add_term({1, 0, 1}, rat(1));
    e2.add_term({0, 1, 1}, rat(1));
    CHECK(laurent_divide_exact(e2, e2) == LaurentPolynomial::one(3));
    CHECK(laurent_divide_exact(e2, LaurentPolynomial::one(3)) == e2);
}

TEST_CASE("division failure reports not divisible") {
    LaurentPolynomial num = LaurentPolynomial::one(1);  // 1
    LaurentPolynomial den = LaurentPolynomial::one(1);
    den.add_term({1}, rat(-1));  // 1 - q
    CHECK_THROWS_AS(laurent_divide_exact(num, den), NotDivisibleError);

    LaurentPolynomial num2 = LaurentPolynomial::one(1);
    num2.add_term({3}, rat(1));  // 1 + q^3 is not divisible by 1 - q
    CHECK_THROWS_AS(laurent_divide_exact(num2, den), NotDivisibleError);
}

TEST_CASE("divide(a*b, b) == a on random laurent polynomials") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 3);
        LaurentPolynomial a = random_laurent(rng, nvars, 5);
        LaurentPolynomial b = random_laurent(rng, nvars, 4);
        if (b.is_zero()) continue;
        CHECK(laurent_divide_exact(a * b, b) == a);
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("evaluation and specialization") {
    LaurentPolynomial p(2);
    p.add_term({-1, 2}, rat(3));
    p.add_term({0, 0}, rat(1, 2));
    // 3 * x1^-1 x2^2 + 1/2 at (2, 3) = 27/2 + 1/2 = 14
    CHECK(p.evaluate({rat(2), rat(3)}) == rat(14));
    // x1 -> q, x2 -> q^2: 3 q^3 + 1/2
    LaurentPolynomial q = p.specialize({1, 2});
    CHECK(q.term_count() == 2);
    CHECK(q.terms().at({3}) == rat(3));
    CHECK(q.terms().at({0}) == rat(1, 2));
}

TEST_CASE("todd factor series matches frozen expansions") {
    auto t1 = todd_factor_series(1, 4);
    CHECK(t1.coefficients() ==
          std::vector<Rational>{rat(1), rat(1, 2), rat(1, 12), rat(0), rat(-1, 720)});
    auto tm1 = todd_factor_series(-1, 2);
    CHECK(tm1.coefficients() == std::vector<Rational>{rat(1), rat(-1, 2), rat(1, 12)});
    auto t2 = todd_factor_series(2, 2);
    CHECK(t2.coefficients() == std::vector<Rational>{rat(1), rat(1), rat(1, 3)});
    CHECK_THROWS_AS(todd_factor_series(0, 3), std::invalid_argument);
}

TEST_CASE("todd factor coefficients equal B+_k r^k / k!") {
    const int order = 12;
    auto bern = bernoulli_plus_oracle(order);
    for (long r : {1L, -1L, 2L, -3L, 5L}) {
        auto series = todd_factor_series(r, order);
        Rational r_pow(1);
        Rational factorial(1);
        for (int k = 0; k <= order; ++k) {
            if (k > 0) {
                r_pow *= r;
                factorial *= k;
            }
            CHECK(series[k] == bern[k] * r_pow / factorial);
        }
        // odd coefficients beyond the first vanish
        for (int k = 3; k <= order; k += 2) CHECK(series[k] == 0);
    }
}

TEST_CASE("rr_eval frozen values") {
    CHECK(rr_eval(1, {1}) == rat(3, 2));
    CHECK(rr_eval(0, {1, 1}) == rat(5, 12));
    for (long r : {-3L, 2L, 7L}) CHECK(rr_eval(0, {r}) == rat(r, 2));
    CHECK_THROWS_AS(rr_eval(1, {1, 0}), std::invalid_argument);
}

TEST_CASE("rr_eval is symmetric in the r multiset") {
    std::vector<long> r = {1, -2, 3, 1};
    Rational reference = rr_eval(5, r);
    std::sort(r.begin(), r.end());
    do {
        CHECK(rr_eval(5, r) == reference);
    } while (std::next_permutation(r.begin(), r.end()));
}

TEST_CASE("rr_symbolic small cases") {
    CHECK(rr_symbolic(0) == LaurentPolynomial::one(1));

    LaurentPolynomial expected(2);
    expected.add_term({1, 0}, rat(1));      // b
    expected.add_term({0, 1}, rat(1, 2));   // r1 / 2
    CHECK(rr_symbolic(1) == expected);
}

TEST_CASE("rr_symbolic matches rr_eval at concrete arguments") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int M : {1, 2, 3, 4}) {
        LaurentPolynomial sym = rr_symbolic(M);
        long degree = 0;
        CHECK(sym.is_homogeneous(&degree));
        CHECK(degree == M);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> point;
            long b = dist(rng);
            point.push_back(rat(b));
            std::vector<long> rs;
            for (int i = 0; i < M; ++i) {
                int v = dist(rng);
                if (v == 0) v = 1;
                rs.push_back(v);
                point.push_back(rat(v));
            }
            CHECK(sym.evaluate(point) == rr_eval(b, rs));
        }
    }
}

TEST_CASE("rr_symbolic is symmetric in the r variables") {
    LaurentPolynomial sym = rr_symbolic(3);
    // swap r1 and r2 by permuting exponent entries 1 and 2
    LaurentPolynomial swapped(4);
    for (const auto& [e, c] : sym.terms()) {
        Exponents p = e;
        std::swap(p[1], p[2]);
        swapped.add_term(p, c);
    }
    CHECK(swapped == sym);
}
