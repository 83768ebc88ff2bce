#ifndef SCHUR3_WEIGHT_CHARACTER_HPP
#define SCHUR3_WEIGHT_CHARACTER_HPP

#include <map>
#include <string>

#include "schur3/laurent.hpp"

namespace schur3 {

// A GL(n) character as a map from weights (nonnegative exponent vectors)
// to positive integer multiplicities.
struct WeightCharacter {
    int n = 0;
    std::map<Exponents, long> entries;

    long dimension() const;
    bool operator==(const WeightCharacter&) const = default;
};

// True when the multiplicity function is constant on permutation orbits of
// the exponent vectors and every orbit is fully present.
bool is_symmetric(const WeightCharacter& wc);

// True when all exponent sums agree; degree_out receives the common value.
bool is_homogeneous(const WeightCharacter& wc, long* degree_out = nullptr);

// "x1*x2 + 2*x1*x3 + ..." in descending lex order of exponents.
std::string format_weight_character(const WeightCharacter& wc);

}  // namespace schur3

#endif
