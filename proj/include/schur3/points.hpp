#ifndef SCHUR3_POINTS_HPP
#define SCHUR3_POINTS_HPP

#include <cstdint>
#include <vector>

#include "schur3/laurent.hpp"
#include "schur3/rational.hpp"

namespace schur3 {

// Deterministic sample of pole-free evaluation points: small distinct
// positive rationals, rejected until 1 - x^v is nonzero for every supplied
// character v.
std::vector<std::vector<Rational>> random_points(int n, int count, std::uint64_t seed,
                                                 const std::vector<Exponents>& avoid_characters);

}  // namespace schur3

#endif
