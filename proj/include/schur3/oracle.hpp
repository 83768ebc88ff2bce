#ifndef SCHUR3_ORACLE_HPP
#define SCHUR3_ORACLE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "schur3/diagram.hpp"
#include "schur3/weight_character.hpp"

namespace schur3 {

// A three-row diagram as an explicit column sequence (repetition allowed;
// order matters only for square indexing).
struct GeneralDiagram {
    std::vector<unsigned> columns;  // row-set bitmasks, each nonempty, within 0b111

    long square_count() const;
    bool operator==(const GeneralDiagram&) const = default;
};

// Text form: semicolon-separated columns, each a comma-separated row set,
// e.g. "1,2;2,3;1,3".
GeneralDiagram parse_general_diagram(std::string_view text);
std::string format_general_diagram(const GeneralDiagram& gd);

// Canonical expansion of a multiplicity vector into a column list.
GeneralDiagram diagram_columns(const Diagram3& d);

struct OracleLimits {
    long max_squares;  // default 8, overridable via SCHUR_MAX_SQUARES
    int max_rank;      // default 4

    OracleLimits();
};

// Ground truth by brute force: the weight-multiplicity character of the
// image of the row symmetrizer followed by the column antisymmetrizer on
// the tensor power, computed blockwise per content vector as the rank of
// the operator over exact integers.
WeightCharacter schur_module_character(const GeneralDiagram& gd, int n,
                                       const OracleLimits& limits = OracleLimits());

long schur_module_dimension(const GeneralDiagram& gd, int n,
                            const OracleLimits& limits = OracleLimits());

// The classical Schur polynomial by semistandard tableau enumeration.
WeightCharacter schur_polynomial(const Partition3& lambda, int n);

// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i), lambda padded to n.
Integer weyl_dimension(const Partition3& lambda, int n);

}  // namespace schur3

#endif
