#ifndef SCHUR3_CHARACTER_HPP
#define SCHUR3_CHARACTER_HPP

#include <map>
#include <string>
#include <vector>

#include "schur3/diagram.hpp"
#include "schur3/laurent.hpp"
#include "schur3/tabloid.hpp"
#include "schur3/weight_character.hpp"

namespace schur3 {

// Singular-term form: the single reduced term, or the pair/bracket coming
// from the two resolutions.
enum class Variant { Simplified, SS, FM };

std::string variant_name(Variant v);
Variant parse_variant(std::string_view name);

class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SpecializationPoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One fixed-point term: a Laurent numerator over a product of factors
// (1 - x^v)^multiplicity.
struct Contribution {
    LaurentPolynomial numerator;
    std::map<Exponents, int> denominator;
    std::string origin;  // diagnostic tag used in pole reports

    explicit Contribution(int n) : numerator(n) {}
};

struct CharacterSum {
    int n = 0;
    Diagram3 diagram;
    Variant variant = Variant::Simplified;
    std::vector<Contribution> terms;
    long tabloid_count = 0;
};

Contribution contribution_smooth(const Tabloid& tab, const Diagram3& d);

// One term (Simplified, FM) or two (SS) for the degenerate triangle (i,j,k).
std::vector<Contribution> contribution_singular(int i, int j, int k, int n, const Diagram3& d,
                                                Variant variant);

CharacterSum character_sum(const Diagram3& d, int n, Variant variant = Variant::Simplified);

// Exact value of the sum at a pole-free point; throws PoleError naming the
// offending term and factor otherwise.
Rational evaluate_character(const CharacterSum& cs, const std::vector<Rational>& point);

// Substitutes x_i -> q^{exponents[i-1]} (default exponents 1..n), sums over
// a common denominator and divides exactly.  The result specialises the
// character; its value at q = 1 is dim S_D.
LaurentPolynomial specialize_q(const CharacterSum& cs, std::vector<int> exponents = {});

// Evaluation at q = 1 (sum of coefficients).
Rational eval_at_one(const LaurentPolynomial& univariate);

// Expands the full sum to the character polynomial (n <= 4), checking that
// all coefficients are nonnegative integers and every monomial has total
// degree total_boxes(d).
WeightCharacter expand_character(const CharacterSum& cs);

struct VariantCheck {
    std::vector<Rational> point;
    Rational simplified, ss, fm;
    bool equal = false;
};

struct VariantEqualityReport {
    std::vector<VariantCheck> checks;
    bool all_equal = false;
    // The trivial-bundle identity must fail once the zeta special character
    // is perturbed; one flag per usable point, all required true.
    bool perturbation_detected = false;
    std::string detail;
};

VariantEqualityReport verify_variant_equality(int i, int j, int k, const Diagram3& d, int n,
                                              const std::vector<std::vector<Rational>>& points);

// Union of all denominator characters appearing in the sum (used for
// pole-free point sampling).
std::vector<Exponents> pole_characters(const CharacterSum& cs);

}  // namespace schur3

#endif
