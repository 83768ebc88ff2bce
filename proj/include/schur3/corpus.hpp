#ifndef SCHUR3_CORPUS_HPP
#define SCHUR3_CORPUS_HPP

#include <vector>

#include "schur3/diagram.hpp"

namespace schur3 {

// Verification diagrams: the seven single columns plus Young, non-Young,
// repeated-column, and triangle-like cases, all within the 8-square
// brute-force budget.
std::vector<Diagram3> builtin_corpus();

}  // namespace schur3

#endif
