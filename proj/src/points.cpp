#include "schur3/points.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace schur3 {

std::vector<std::vector<Rational>> random_points(int n, int count, std::uint64_t seed,
                                                 const std::vector<Exponents>& avoid_characters) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num_dist(1, 40);
    std::uniform_int_distribution<int> den_dist(1, 12);

    std::vector<std::vector<Rational>> points;
    int attempts = 0;
    while (static_cast<int>(points.size()) < count) {
        if (++attempts > 10000 * (count + 1))
            throw std::runtime_error("failed to sample pole-free points");
        std::vector<Rational> point(n);
        std::set<Rational> used;
        bool ok = true;
        for (int c = 0; c < n && ok; ++c) {
            point[c] = rat(num_dist(rng), den_dist(rng));
            ok = used.insert(point[c]).second;  // coordinates pairwise distinct
        }
        if (!ok) continue;
        for (const auto& v : avoid_characters) {
            Rational monomial(1);
            for (int c = 0; c < n; ++c)
                if (v[c] != 0) monomial *= pow_rational(point[c], v[c]);
            if (monomial == 1) {
                ok = false;
                break;
            }
        }
        if (ok) points.push_back(std::move(point));
    }
    return points;
}

}  // namespace schur3
