#ifndef SCHUR3_DIMENSION_HPP
#define SCHUR3_DIMENSION_HPP

#include <string>
#include <vector>

#include "schur3/character.hpp"
#include "schur3/diagram.hpp"
#include "schur3/tabloid.hpp"

namespace schur3 {

class DegenerateSSError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One fixed-point term of the dimension sum: RR_M(b; r) / prod(r).
struct DimContribution {
    long b = 0;
    std::vector<long> r;  // 3n-3 nonzero entries
    Rational value;
    std::string origin;
};

// Smooth tabloids give one term; singular tabloids give one term
// (Simplified) or two (SS).  The SS pair is undefined when 2j = i+k.
std::vector<DimContribution> dim_contribution(const Tabloid& tab, const Diagram3& d,
                                              Variant variant = Variant::Simplified);

// Exact sum over all tabloids; asserts the result is a nonnegative integer.
Integer dimension(const Diagram3& d, int n, Variant variant = Variant::Simplified);

// Same sum with the per-tabloid terms exposed.
struct DimensionBreakdown {
    Integer value;
    std::vector<DimContribution> contributions;
};
DimensionBreakdown dimension_breakdown(const Diagram3& d, int n,
                                       Variant variant = Variant::Simplified);

}  // namespace schur3

#endif
