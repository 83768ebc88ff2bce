#include "schur3/laurent.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace schur3 {

LaurentPolynomial::LaurentPolynomial(int var_count) : var_count_(var_count) {
    if (var_count < 0) throw std::invalid_argument("negative variable count");
}

LaurentPolynomial LaurentPolynomial::monomial(Exponents exps, Rational coeff) {
    LaurentPolynomial p(static_cast<int>(exps.size()));
    if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

LaurentPolynomial LaurentPolynomial::constant(int var_count, Rational value) {
    LaurentPolynomial p(var_count);
    if (value != 0) p.terms_.emplace(Exponents(var_count, 0), std::move(value));
    return p;
}

void LaurentPolynomial::check_arity(const LaurentPolynomial& other) const {
    if (var_count_ != other.var_count_)
        throw std::invalid_argument("variable-count mismatch: " + std::to_string(var_count_) +
                                    " vs " + std::to_string(other.var_count_));
}

void LaurentPolynomial::add_term(const Exponents& exps, const Rational& coeff) {
    if (static_cast<int>(exps.size()) != var_count_)
        throw std::invalid_argument("exponent vector has wrong length");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    check_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    check_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial p(var_count_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check_arity(b);
    LaurentPolynomial p(a.var_count_);
    Exponents e(a.var_count_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.var_count_; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponents& delta, const Rational& coeff) const {
    if (static_cast<int>(delta.size()) != var_count_)
        throw std::invalid_argument("shift vector has wrong length");
    LaurentPolynomial p(var_count_);
    if (coeff == 0) return p;
    Exponents e(var_count_);
    for (const auto& [ea, ca] : terms_) {
        for (int i = 0; i < var_count_; ++i) e[i] = ea[i] + delta[i];
        p.terms_.emplace(e, ca * coeff);
    }
    return p;
}

Rational LaurentPolynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != var_count_)
        throw std::invalid_argument("evaluation point has wrong length");
    for (const auto& x : point)
        if (x == 0) throw std::invalid_argument("evaluation at zero coordinate");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (int i = 0; i < var_count_; ++i)
            if (e[i] != 0) m *= pow_rational(point[i], e[i]);
        total += m;
    }
    return total;
}

LaurentPolynomial LaurentPolynomial::specialize(const std::vector<int>& weights) const {
    if (static_cast<int>(weights.size()) != var_count_)
        throw std::invalid_argument("weight vector has wrong length");
    LaurentPolynomial q(1);
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int i = 0; i < var_count_; ++i) d += static_cast<long>(e[i]) * weights[i];
        q.add_term({static_cast<int>(d)}, c);
    }
    return q;
}

bool LaurentPolynomial::is_homogeneous(long* degree_out) const {
    bool first = true;
    long degree = 0;
    for (const auto& [e, c] : terms_) {
        long d = std::accumulate(e.begin(), e.end(), 0L);
        if (first) {
            degree = d;
            first = false;
        } else if (d != degree) {
            return false;
        }
    }
    if (degree_out) *degree_out = degree;
    return true;
}

std::string LaurentPolynomial::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool leading = true;
    // print in descending lex order so the dominant monomial comes first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (leading) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        leading = false;
        bool has_var = std::any_of(e.begin(), e.end(), [](int k) { return k != 0; });
        bool printed_coeff = false;
        if (abs_c != 1 || !has_var) {
            out << abs_c.get_str();
            printed_coeff = true;
        }
        bool first_var = true;
        for (int i = 0; i < var_count_; ++i) {
            if (e[i] == 0) continue;
            if (printed_coeff || !first_var) out << "*";
            first_var = false;
            if (i < static_cast<int>(var_names.size()))
                out << var_names[i];
            else
                out << "x" << (i + 1);
            if (e[i] != 1) out << "^" << e[i];
        }
    }
    return out.str();
}

LaurentPolynomial laurent_divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (num.var_count() != den.var_count())
        throw std::invalid_argument("variable-count mismatch in division");
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const int nv = num.var_count();
    LaurentPolynomial quotient(nv);
    if (num.is_zero()) return quotient;

    // Newton-polytope bound: supp(num/den) lies in the per-coordinate box
    // [min(num)-min(den), max(num)-max(den)].
    Exponents lo(nv), hi(nv);
    {
        Exponents num_lo(nv, std::numeric_limits<int>::max()), num_hi(nv, std::numeric_limits<int>::min());
        Exponents den_lo(nv, std::numeric_limits<int>::max()), den_hi(nv, std::numeric_limits<int>::min());
        for (const auto& [e, c] : num.terms())
            for (int i = 0; i < nv; ++i) {
                num_lo[i] = std::min(num_lo[i], e[i]);
                num_hi[i] = std::max(num_hi[i], e[i]);
            }
        for (const auto& [e, c] : den.terms())
            for (int i = 0; i < nv; ++i) {
                den_lo[i] = std::min(den_lo[i], e[i]);
                den_hi[i] = std::max(den_hi[i], e[i]);
            }
        for (int i = 0; i < nv; ++i) {
            lo[i] = num_lo[i] - den_lo[i];
            hi[i] = num_hi[i] - den_hi[i];
            if (lo[i] > hi[i]) throw NotDivisibleError("not divisible: quotient support box is empty");
        }
    }

    const auto& den_lead = *den.terms().rbegin();
    LaurentPolynomial remainder = num;
    Exponents t(nv);
    while (!remainder.is_zero()) {
        const auto& rem_lead = *remainder.terms().rbegin();
        for (int i = 0; i < nv; ++i) {
            t[i] = rem_lead.first[i] - den_lead.first[i];
            if (t[i] < lo[i] || t[i] > hi[i])
                throw NotDivisibleError("not divisible: leading term escapes quotient support box");
        }
        Rational coeff = rem_lead.second / den_lead.second;
        quotient.add_term(t, coeff);
        remainder -= den.shifted(t, coeff);
    }
    return quotient;
}

}  // namespace schur3
