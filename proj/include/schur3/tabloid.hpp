#ifndef SCHUR3_TABLOID_HPP
#define SCHUR3_TABLOID_HPP

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "schur3/diagram.hpp"
#include "schur3/laurent.hpp"

namespace schur3 {

// A torus-fixed point of the triangle space: inclusion-compatible labels
// for the seven column types.  Pair and triple labels are kept sorted.
struct Tabloid {
    int n = 0;
    std::array<int, 3> points{};                 // labels of {1}, {2}, {3}
    std::array<std::array<int, 2>, 3> pairs{};   // labels of {1,2}, {2,3}, {1,3}
    std::array<int, 3> triple{};                 // label of {1,2,3}

    const std::array<int, 2>& e12() const { return pairs[0]; }
    const std::array<int, 2>& e23() const { return pairs[1]; }
    const std::array<int, 2>& e13() const { return pairs[2]; }

    // Label set of a column type (canonical index 0..6) as a bitmask over
    // 1 << (label - 1).
    unsigned label_mask(int type) const;

    auto operator<=>(const Tabloid&) const = default;
};

enum class TabloidKind { Smooth, Singular };

struct TabloidClass {
    TabloidKind kind = TabloidKind::Smooth;
    std::array<int, 3> ijk{};  // set only when Singular
    bool operator==(const TabloidClass&) const = default;
};

// All valid tabloids for rank n, in a fixed deterministic order;
// there are 11 n(n-1)(n-2) of them.
std::vector<Tabloid> enumerate_tabloids(int n);

// The maximally degenerate tabloid with all points i, all pairs {i,j},
// triple {i,j,k}.
Tabloid singular_tabloid(int i, int j, int k, int n);

// d[a][b] (0-indexed) = number of connected components of the graph on
// columns whose label contains a+1 but not b+1, with edges between
// inclusion-comparable column types.  Always computed on the full
// 7-column universal diagram.
std::vector<std::vector<int>> d_matrix(const Tabloid& tab);

TabloidClass classify(const Tabloid& tab);

// Exponent of x_a = sum over columns containing a of the column multiplicity.
Exponents weight(const Tabloid& tab, const Diagram3& d);

// Sum of all labels weighted by column multiplicities; equals
// <weight, (1..n)>.
long b_value(const Tabloid& tab, const Diagram3& d);

// Tangent eigenvalue integers at a smooth fixed point: entry a-b with
// multiplicity d_ab, sorted; size 3n-3.  Throws on singular tabloids.
std::vector<long> r_multiset(const Tabloid& tab);

// Entries i-l, j-l, k-l for each l in [1,n] outside {i,j,k}, sorted.
std::vector<long> r_prime(int i, int j, int k, int n);

// A torus eigenvalue x^character on a tangent/normal direction, plus the
// Chern class of the corresponding line bundle summand (normal bundle
// data only; zero for tangent eigenvalues).
struct EigenDatum {
    Exponents character;
    int chern = 0;
    bool operator==(const EigenDatum&) const = default;
};

// Tangent eigenvalues at the two resolved fixed points lying over the
// degenerate triangle (i,j,k); each list has 3n-3 entries.
struct SSFixedPointData {
    std::vector<EigenDatum> eta;
    std::vector<EigenDatum> zeta;
};

SSFixedPointData ss_eigenvalues(int i, int j, int k, int n);

// Normal bundle summands of the fixed projective line over the degenerate
// triangle (i,j,k): 3n-4 line bundles, exactly two with Chern class -1.
std::vector<EigenDatum> fm_normal_bundle(int i, int j, int k, int n);

nlohmann::json tabloid_to_json(const Tabloid& tab);
Tabloid tabloid_from_json(const nlohmann::json& j, int n);

std::string tabloid_brief(const Tabloid& tab);  // compact one-line form

}  // namespace schur3

#endif
