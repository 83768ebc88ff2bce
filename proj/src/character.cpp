#include "schur3/character.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schur3 {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Simplified: return "simplified";
        case Variant::SS: return "ss";
        case Variant::FM: return "fm";
    }
    return "?";
}

Variant parse_variant(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "simplified") return Variant::Simplified;
    if (s == "ss") return Variant::SS;
    if (s == "fm") return Variant::FM;
    throw std::invalid_argument("unknown variant: " + std::string(name));
}

namespace {

std::string character_str(const Exponents& v) {
    return LaurentPolynomial::monomial(v).str();
}

Exponents root_vec(int a, int b, int n) {
    Exponents e(n, 0);
    e[a - 1] -= 1;
    e[b - 1] += 1;
    return e;
}

void add_factor(std::map<Exponents, int>& denom, const Exponents& v, int mult = 1) {
    denom[v] += mult;
}

// (1 - x^v)^k expanded via the binomial theorem.
LaurentPolynomial binomial_power(const Exponents& v, int k) {
    const int nv = static_cast<int>(v.size());
    LaurentPolynomial p(nv);
    Integer binom = 1;
    Exponents e(nv, 0);
    for (int j = 0; j <= k; ++j) {
        Rational coeff(binom);
        if (j % 2) coeff = -coeff;
        p.add_term(e, coeff);
        binom = binom * (k - j) / (j + 1);
        for (int c = 0; c < nv; ++c) e[c] += v[c];
    }
    return p;
}

// Flips every denominator character whose first nonzero exponent is
// negative, folding the correction monomial into the numerator:
// 1/(1 - x^v)^m = (-1)^m x^{-mv} / (1 - x^{-v})^m.
struct NormalizedTerm {
    LaurentPolynomial numerator;
    std::map<Exponents, int> denom;
};

bool is_canonical(const Exponents& v) {
    for (int e : v) {
        if (e > 0) return true;
        if (e < 0) return false;
    }
    throw std::invalid_argument("zero character in denominator");
}

NormalizedTerm normalize_term(const LaurentPolynomial& numerator,
                              const std::map<Exponents, int>& denom) {
    NormalizedTerm t{numerator, {}};
    const int nv = numerator.var_count();
    for (const auto& [v, mult] : denom) {
        if (is_canonical(v)) {
            t.denom[v] += mult;
        } else {
            Exponents flipped(nv), shift(nv);
            for (int c = 0; c < nv; ++c) {
                flipped[c] = -v[c];
                shift[c] = -mult * v[c];
            }
            t.numerator = t.numerator.shifted(shift, mult % 2 ? Rational(-1) : Rational(1));
            t.denom[flipped] += mult;
        }
    }
    return t;
}

// Places the terms over the least common factored denominator, sums the
// numerators, and divides exactly.
LaurentPolynomial sum_over_common_denominator(const std::vector<NormalizedTerm>& terms, int nv) {
    std::map<Exponents, int> common;
    for (const auto& t : terms)
        for (const auto& [v, mult] : t.denom) common[v] = std::max(common[v], mult);

    LaurentPolynomial total(nv);
    for (const auto& t : terms) {
        LaurentPolynomial scaled = t.numerator;
        for (const auto& [v, mult] : common) {
            auto it = t.denom.find(v);
            int deficit = mult - (it == t.denom.end() ? 0 : it->second);
            if (deficit > 0) scaled = scaled * binomial_power(v, deficit);
        }
        total += scaled;
    }

    LaurentPolynomial denominator = LaurentPolynomial::one(nv);
    for (const auto& [v, mult] : common) denominator = denominator * binomial_power(v, mult);
    return laurent_divide_exact(total, denominator);
}

}  // namespace

Contribution contribution_smooth(const Tabloid& tab, const Diagram3& d) {
    if (classify(tab).kind != TabloidKind::Smooth)
        throw std::invalid_argument("contribution_smooth called on a singular tabloid");
    Contribution contrib(tab.n);
    contrib.numerator = LaurentPolynomial::monomial(weight(tab, d));
    auto dm = d_matrix(tab);
    for (int a = 1; a <= tab.n; ++a)
        for (int b = 1; b <= tab.n; ++b)
            if (dm[a - 1][b - 1] > 0)
                add_factor(contrib.denominator, root_vec(a, b, tab.n), dm[a - 1][b - 1]);
    contrib.origin = "smooth " + tabloid_brief(tab);
    return contrib;
}

std::vector<Contribution> contribution_singular(int i, int j, int k, int n, const Diagram3& d,
                                                Variant variant) {
    Tabloid tab = singular_tabloid(i, j, k, n);
    const Exponents wt = weight(tab, d);
    std::ostringstream tag;
    tag << "singular (" << i << "," << j << "," << k << ")";

    auto delta_factors = [&](std::map<Exponents, int>& denom) {
        for (int l = 1; l <= n; ++l) {
            if (l == i || l == j || l == k) continue;
            add_factor(denom, root_vec(i, l, n));
            add_factor(denom, root_vec(j, l, n));
            add_factor(denom, root_vec(k, l, n));
        }
    };

    std::vector<Contribution> out;
    switch (variant) {
        case Variant::Simplified: {
            Contribution c(n);
            c.numerator = LaurentPolynomial::monomial(wt);
            add_factor(c.denominator, root_vec(i, j, n), 3);
            add_factor(c.denominator, root_vec(j, k, n), 3);
            delta_factors(c.denominator);
            c.origin = tag.str() + " simplified";
            out.push_back(std::move(c));
            break;
        }
        case Variant::SS: {
            SSFixedPointData ss = ss_eigenvalues(i, j, k, n);
            for (const auto* list : {&ss.zeta, &ss.eta}) {
                Contribution c(n);
                c.numerator = LaurentPolynomial::monomial(wt);
                for (const auto& eigen : *list) add_factor(c.denominator, eigen.character);
                c.origin = tag.str() + (list == &ss.zeta ? " zeta" : " eta");
                out.push_back(std::move(c));
            }
            break;
        }
        case Variant::FM: {
            // Bracket 1 - (1-x_i/x_j)^{-1} - (1-x_j/x_k)^{-1} cleared of its
            // internal inverses.
            Contribution c(n);
            LaurentPolynomial a = binomial_power(root_vec(j, i, n), 1);  // 1 - x_i/x_j
            LaurentPolynomial b = binomial_power(root_vec(k, j, n), 1);  // 1 - x_j/x_k
            c.numerator = LaurentPolynomial::monomial(wt) * (a * b - b - a);
            add_factor(c.denominator, root_vec(j, i, n), 1);
            add_factor(c.denominator, root_vec(k, j, n), 1);
            add_factor(c.denominator, root_vec(i, j, n), 2);
            add_factor(c.denominator, root_vec(i, k, n), 1);
            add_factor(c.denominator, root_vec(j, k, n), 2);
            delta_factors(c.denominator);
            c.origin = tag.str() + " fm";
            out.push_back(std::move(c));
            break;
        }
    }
    return out;
}

CharacterSum character_sum(const Diagram3& d, int n, Variant variant) {
    if (n < 3) throw std::invalid_argument("rank n must be at least 3");
    CharacterSum cs;
    cs.n = n;
    cs.diagram = d;
    cs.variant = variant;
    for (const Tabloid& tab : enumerate_tabloids(n)) {
        ++cs.tabloid_count;
        TabloidClass cls = classify(tab);
        if (cls.kind == TabloidKind::Smooth) {
            cs.terms.push_back(contribution_smooth(tab, d));
        } else {
            auto singular = contribution_singular(cls.ijk[0], cls.ijk[1], cls.ijk[2], n, d, variant);
            for (auto& c : singular) cs.terms.push_back(std::move(c));
        }
    }
    return cs;
}

Rational evaluate_character(const CharacterSum& cs, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != cs.n)
        throw std::invalid_argument("evaluation point has wrong length");
    Rational total(0);
    for (const auto& term : cs.terms) {
        Rational denom(1);
        for (const auto& [v, mult] : term.denominator) {
            Rational monomial(1);
            for (int c = 0; c < cs.n; ++c)
                if (v[c] != 0) monomial *= pow_rational(point[c], v[c]);
            Rational factor = Rational(1) - monomial;
            if (factor == 0)
                throw PoleError("pole at point: factor (1 - " + character_str(v) +
                                ") vanishes in term [" + term.origin + "]");
            denom *= pow_rational(factor, mult);
        }
        total += term.numerator.evaluate(point) / denom;
    }
    return total;
}

LaurentPolynomial specialize_q(const CharacterSum& cs, std::vector<int> exponents) {
    if (exponents.empty()) {
        exponents.resize(cs.n);
        for (int c = 0; c < cs.n; ++c) exponents[c] = c + 1;
    }
    if (static_cast<int>(exponents.size()) != cs.n)
        throw std::invalid_argument("exponent list has wrong length");

    std::vector<NormalizedTerm> terms;
    terms.reserve(cs.terms.size());
    for (const auto& term : cs.terms) {
        LaurentPolynomial num = term.numerator.specialize(exponents);
        std::map<Exponents, int> denom;
        for (const auto& [v, mult] : term.denominator) {
            long s = 0;
            for (int c = 0; c < cs.n; ++c) s += static_cast<long>(v[c]) * exponents[c];
            if (s == 0)
                throw SpecializationPoleError("specialization pole: character " +
                                              character_str(v) + " collapses to 1 in term [" +
                                              term.origin + "]; change exponents or variant");
            denom[{static_cast<int>(s)}] += mult;
        }
        terms.push_back(normalize_term(num, denom));
    }
    return sum_over_common_denominator(terms, 1);
}

Rational eval_at_one(const LaurentPolynomial& univariate) {
    if (univariate.var_count() != 1) throw std::invalid_argument("expected univariate polynomial");
    Rational total(0);
    for (const auto& [e, c] : univariate.terms()) total += c;
    return total;
}

WeightCharacter expand_character(const CharacterSum& cs) {
    if (cs.n > 4)
        throw std::invalid_argument("expansion supported only for n <= 4; use evaluation or "
                                    "q-specialization at larger ranks");
    std::vector<NormalizedTerm> terms;
    terms.reserve(cs.terms.size());
    for (const auto& term : cs.terms) terms.push_back(normalize_term(term.numerator, term.denominator));
    LaurentPolynomial expanded = sum_over_common_denominator(terms, cs.n);

    long degree = 0;
    if (!expanded.is_homogeneous(&degree) || (!expanded.is_zero() && degree != cs.diagram.total_boxes()))
        throw std::logic_error("expanded character is not homogeneous of the diagram degree");

    WeightCharacter wc;
    wc.n = cs.n;
    for (const auto& [e, c] : expanded.terms()) {
        if (c.get_den() != 1 || c < 0)
            throw std::logic_error("expanded character has a non-integer or negative coefficient at " +
                                   character_str(e));
        for (int exp : e)
            if (exp < 0) throw std::logic_error("expanded character has a negative exponent");
        if (!c.get_num().fits_slong_p())
            throw std::overflow_error("character multiplicity exceeds long range");
        wc.entries[e] = c.get_num().get_si();
    }
    return wc;
}

std::vector<Exponents> pole_characters(const CharacterSum& cs) {
    std::set<Exponents> seen;
    for (const auto& term : cs.terms)
        for (const auto& [v, mult] : term.denominator) seen.insert(v);
    return {seen.begin(), seen.end()};
}

namespace {

// The trivial-bundle sum in the SS form with the zeta special character
// x_i x_k / x_j^2 replaced by x_i x_k^2 / x_j^3.
CharacterSum perturbed_identity_sum(int n) {
    Diagram3 trivial;
    CharacterSum cs;
    cs.n = n;
    cs.variant = Variant::SS;
    for (const Tabloid& tab : enumerate_tabloids(n)) {
        ++cs.tabloid_count;
        TabloidClass cls = classify(tab);
        if (cls.kind == TabloidKind::Smooth) {
            cs.terms.push_back(contribution_smooth(tab, trivial));
            continue;
        }
        auto [i, j, k] = cls.ijk;
        auto pair = contribution_singular(i, j, k, n, trivial, Variant::SS);
        Exponents special(n, 0), perturbed(n, 0);
        special[i - 1] += 1;
        special[k - 1] += 1;
        special[j - 1] -= 2;
        perturbed[i - 1] += 1;
        perturbed[k - 1] += 2;
        perturbed[j - 1] -= 3;
        auto node = pair[0].denominator.extract(special);
        node.key() = perturbed;
        pair[0].denominator.insert(std::move(node));
        pair[0].origin += " perturbed";
        for (auto& c : pair) cs.terms.push_back(std::move(c));
    }
    return cs;
}

}  // namespace

VariantEqualityReport verify_variant_equality(int i, int j, int k, const Diagram3& d, int n,
                                              const std::vector<std::vector<Rational>>& points) {
    VariantEqualityReport report;
    CharacterSum simplified, ss, fm;
    for (auto [variant, sum] : {std::pair{Variant::Simplified, &simplified},
                                std::pair{Variant::SS, &ss}, std::pair{Variant::FM, &fm}}) {
        sum->n = n;
        sum->diagram = d;
        sum->variant = variant;
        sum->terms = contribution_singular(i, j, k, n, d, variant);
    }

    report.all_equal = true;
    for (const auto& point : points) {
        VariantCheck check;
        check.point = point;
        check.simplified = evaluate_character(simplified, point);
        check.ss = evaluate_character(ss, point);
        check.fm = evaluate_character(fm, point);
        check.equal = check.simplified == check.ss && check.ss == check.fm;
        if (!check.equal) {
            report.all_equal = false;
            if (report.detail.empty()) {
                std::ostringstream msg;
                msg << "variant disagreement at point (";
                for (std::size_t c = 0; c < point.size(); ++c)
                    msg << (c ? "," : "") << to_string(point[c]);
                msg << "): simplified=" << to_string(check.simplified)
                    << " ss=" << to_string(check.ss) << " fm=" << to_string(check.fm);
                report.detail = msg.str();
            }
        }
        report.checks.push_back(std::move(check));
    }

    CharacterSum perturbed = perturbed_identity_sum(n);
    int usable = 0;
    bool always_broken = true;
    for (const auto& point : points) {
        Rational value;
        try {
            value = evaluate_character(perturbed, point);
        } catch (const PoleError&) {
            continue;  // perturbed factor vanished; skip this point
        }
        ++usable;
        if (value == 1) always_broken = false;
    }
    report.perturbation_detected = usable > 0 && always_broken;
    if (!report.perturbation_detected && report.detail.empty())
        report.detail = usable == 0 ? "no usable points for the perturbation check"
                                    : "perturbed sum still evaluates to 1";
    return report;
}

}  // namespace schur3
