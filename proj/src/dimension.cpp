#include "schur3/dimension.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "schur3/series.hpp"

namespace schur3 {

namespace {

std::vector<long> singular_r_simplified(int i, int j, int k, int n) {
    std::vector<long> r = r_prime(i, j, k, n);
    for (int c = 0; c < 3; ++c) {
        r.push_back(i - j);
        r.push_back(j - k);
    }
    std::sort(r.begin(), r.end());
    return r;
}

Rational product_of(const std::vector<long>& r) {
    Rational p(1);
    for (long v : r) p *= Rational(v);
    return p;
}

// Shared per-call cache: the Todd product depends only on the r multiset,
// so the exp(bU) part is folded in per tabloid.
class RrEvaluator {
public:
    explicit RrEvaluator(int M) : M_(M) {}

    Rational eval(long b, const std::vector<long>& r) {
        if (static_cast<int>(r.size()) != M_)
            throw std::invalid_argument("r multiset has wrong size");
        const TruncatedSeries& todd = todd_product(r);
        // coefficient of U^M in exp(bU) * todd
        Rational acc(0);
        Rational b_pow_over_fact(1);
        for (int k = 0; k <= M_; ++k) {
            if (k > 0) b_pow_over_fact *= rat(b, k);
            acc += b_pow_over_fact * todd[M_ - k];
        }
        return acc;
    }

private:
    const TruncatedSeries& todd_product(const std::vector<long>& r) {
        auto it = products_.find(r);
        if (it != products_.end()) return it->second;
        TruncatedSeries prod = TruncatedSeries::one(M_);
        for (long v : r) prod *= todd_factor(v);
        return products_.emplace(r, std::move(prod)).first->second;
    }

    const TruncatedSeries& todd_factor(long v) {
        auto it = factors_.find(v);
        if (it != factors_.end()) return it->second;
        return factors_.emplace(v, todd_factor_series(v, M_)).first->second;
    }

    int M_;
    std::map<std::vector<long>, TruncatedSeries> products_;
    std::map<long, TruncatedSeries> factors_;
};

std::vector<DimContribution> dim_contribution_impl(const Tabloid& tab, const Diagram3& d,
                                                   Variant variant, RrEvaluator& rr) {
    const long b = b_value(tab, d);
    TabloidClass cls = classify(tab);
    std::vector<DimContribution> out;

    if (cls.kind == TabloidKind::Smooth) {
        DimContribution c;
        c.b = b;
        c.r = r_multiset(tab);
        c.value = rr.eval(b, c.r) / product_of(c.r);
        c.origin = "smooth " + tabloid_brief(tab);
        out.push_back(std::move(c));
        return out;
    }

    auto [i, j, k] = cls.ijk;
    std::ostringstream tag;
    tag << "singular (" << i << "," << j << "," << k << ")";
    switch (variant) {
        case Variant::Simplified: {
            DimContribution c;
            c.b = b;
            c.r = singular_r_simplified(i, j, k, tab.n);
            c.value = rr.eval(b, c.r) / product_of(c.r);
            c.origin = tag.str() + " simplified";
            out.push_back(std::move(c));
            break;
        }
        case Variant::SS: {
            if (2 * j == i + k)
                throw DegenerateSSError("degenerate SS tabloid at (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) +
                                        "): 2j = i+k; use the simplified variant");
            std::vector<long> base = r_prime(i, j, k, tab.n);
            std::vector<long> zeta = base, eta = base;
            // zeta: i-j three times, i-k, j-k, 2j-i-k
            zeta.insert(zeta.end(), {static_cast<long>(i - j), static_cast<long>(i - j),
                                     static_cast<long>(i - j), static_cast<long>(i - k),
                                     static_cast<long>(j - k), static_cast<long>(2 * j - i - k)});
            // eta: i-j, i-k, j-k three times, i+k-2j
            eta.insert(eta.end(), {static_cast<long>(i - j), static_cast<long>(i - k),
                                   static_cast<long>(j - k), static_cast<long>(j - k),
                                   static_cast<long>(j - k), static_cast<long>(i + k - 2 * j)});
            for (auto [r, which] : {std::pair{&zeta, " zeta"}, std::pair{&eta, " eta"}}) {
                std::sort(r->begin(), r->end());
                DimContribution c;
                c.b = b;
                c.r = *r;
                c.value = rr.eval(b, c.r) / product_of(c.r);
                c.origin = tag.str() + which;
                out.push_back(std::move(c));
            }
            break;
        }
        case Variant::FM:
            throw std::invalid_argument("no FM form of the dimension sum exists");
    }
    return out;
}

}  // namespace

std::vector<DimContribution> dim_contribution(const Tabloid& tab, const Diagram3& d,
                                              Variant variant) {
    RrEvaluator rr(3 * tab.n - 3);
    return dim_contribution_impl(tab, d, variant, rr);
}

DimensionBreakdown dimension_breakdown(const Diagram3& d, int n, Variant variant) {
    if (n < 3) throw std::invalid_argument("rank n must be at least 3");
    RrEvaluator rr(3 * n - 3);
    DimensionBreakdown result;
    Rational total(0);
    for (const Tabloid& tab : enumerate_tabloids(n)) {
        for (auto& c : dim_contribution_impl(tab, d, variant, rr)) {
            total += c.value;
            result.contributions.push_back(std::move(c));
        }
    }
    if (total.get_den() != 1)
        throw std::logic_error("non-integer dimension sum: " + to_string(total));
    if (total < 0) throw std::logic_error("negative dimension sum: " + to_string(total));
    result.value = total.get_num();
    return result;
}

Integer dimension(const Diagram3& d, int n, Variant variant) {
    if (n < 3) throw std::invalid_argument("rank n must be at least 3");
    RrEvaluator rr(3 * n - 3);
    Rational total(0);
    for (const Tabloid& tab : enumerate_tabloids(n))
        for (const auto& c : dim_contribution_impl(tab, d, variant, rr)) total += c.value;
    if (total.get_den() != 1)
        throw std::logic_error("non-integer dimension sum: " + to_string(total));
    if (total < 0) throw std::logic_error("negative dimension sum: " + to_string(total));
    return total.get_num();
}

}  // namespace schur3
