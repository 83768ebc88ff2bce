#include "schur3/weight_character.hpp"

#include <algorithm>
#include <numeric>

namespace schur3 {

long WeightCharacter::dimension() const {
    long total = 0;
    for (const auto& [e, mult] : entries) total += mult;
    return total;
}

namespace {

long orbit_size(const Exponents& sorted_key) {
    // permutations of a multiset: n! / prod(count!)
    long size = 1;
    for (std::size_t i = 1; i <= sorted_key.size(); ++i) size *= static_cast<long>(i);
    std::size_t i = 0;
    while (i < sorted_key.size()) {
        std::size_t j = i;
        while (j < sorted_key.size() && sorted_key[j] == sorted_key[i]) ++j;
        long run = 1;
        for (std::size_t c = 2; c <= j - i; ++c) run *= static_cast<long>(c);
        size /= run;
        i = j;
    }
    return size;
}

}  // namespace

bool is_symmetric(const WeightCharacter& wc) {
    std::map<Exponents, std::pair<long, long>> orbits;  // sorted key -> (count, mult)
    for (const auto& [e, mult] : wc.entries) {
        Exponents key = e;
        std::sort(key.begin(), key.end());
        auto [it, inserted] = orbits.try_emplace(key, std::pair<long, long>{0, mult});
        if (!inserted && it->second.second != mult) return false;
        it->second.first += 1;
    }
    for (const auto& [key, info] : orbits)
        if (info.first != orbit_size(key)) return false;
    return true;
}

bool is_homogeneous(const WeightCharacter& wc, long* degree_out) {
    bool first = true;
    long degree = 0;
    for (const auto& [e, mult] : wc.entries) {
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

std::string format_weight_character(const WeightCharacter& wc) {
    LaurentPolynomial p(wc.n);
    for (const auto& [e, mult] : wc.entries) p.add_term(e, Rational(mult));
    return p.str();
}

}  // namespace schur3
