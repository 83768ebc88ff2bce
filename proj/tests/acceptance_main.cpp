// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "schur3/character.hpp"
#include "schur3/corpus.hpp"
#include "schur3/dimension.hpp"
#include "schur3/oracle.hpp"
#include "schur3/points.hpp"
#include "schur3/series.hpp"
#include "schur3/tabloid.hpp"

using namespace schur3;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        pass = false;
        detail += " [exceeded " + std::to_string(budget_seconds) + "s budget]";
    }
    if (!pass) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << " criterion " << number << " (" << name << "): " << detail
         << " [" << elapsed << "s]";
    std::cout << line.str() << "\n";
}

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& message) {
    if (!condition) throw Failure(message);
}

std::vector<Partition3> partitions_up_to_four() {
    std::vector<Partition3> out;
    for (long l1 = 0; l1 <= 4; ++l1)
        for (long l2 = 0; l2 <= l1; ++l2)
            for (long l3 = 0; l3 <= l2; ++l3) out.push_back(Partition3{{l1, l2, l3}});
    return out;
}

Diagram3 young_diagram(const Partition3& lambda) {
    Diagram3 d;
    d.m[0] = lambda.lambda[0] - lambda.lambda[1];
    d.m[3] = lambda.lambda[1] - lambda.lambda[2];
    d.m[6] = lambda.lambda[2];
    return d;
}

void check_character_sanity(const WeightCharacter& wc, const Diagram3& d,
                            const std::string& context) {
    expect(is_symmetric(wc), context + ": expanded character is not symmetric");
    long degree = 0;
    expect(is_homogeneous(wc, &degree), context + ": expanded character is not homogeneous");
    if (!wc.entries.empty())
        expect(degree == d.total_boxes(), context + ": wrong homogeneity degree");
    for (const auto& [e, mult] : wc.entries) {
        expect(mult >= 1, context + ": nonpositive multiplicity");
        for (int exp : e) expect(exp >= 0, context + ": negative exponent");
    }
}

}  // namespace

int main() {
    // 1. tabloid counts
    criterion(1, "tabloid count", 1.0, [] {
        for (int n : {3, 4, 5, 6}) {
            long expected = 11L * n * (n - 1) * (n - 2);
            long actual = static_cast<long>(enumerate_tabloids(n).size());
            expect(actual == expected, "count " + std::to_string(actual) + " != " +
                                           std::to_string(expected) + " at n=" + std::to_string(n));
        }
        return "11n(n-1)(n-2) for n=3,4,5,6";
    });

    // 2. RR term count
    criterion(2, "RR_6 term count", 10.0, [] {
        std::size_t terms = rr_symbolic(6).term_count();
        expect(terms == 567, "rr_symbolic(6) has " + std::to_string(terms) + " terms");
        return "rr_symbolic(6) has exactly 567 monomials";
    });

    // 3. trivial bundle identity
    criterion(3, "identity = 1", 60.0, [] {
        Diagram3 trivial;
        for (int n : {3, 4, 5}) {
            for (Variant variant : {Variant::Simplified, Variant::SS, Variant::FM}) {
                CharacterSum cs = character_sum(trivial, n, variant);
                auto points = random_points(n, 20, 1234 + n, pole_characters(cs));
                for (const auto& point : points) {
                    Rational value = evaluate_character(cs, point);
                    expect(value == 1, "character value " + to_string(value) + " != 1 (n=" +
                                           std::to_string(n) + ", " + variant_name(variant) + ")");
                }
            }
            for (Variant variant : {Variant::Simplified, Variant::SS}) {
                Integer dim = dimension(trivial, n, variant);
                expect(dim == 1, "dimension " + dim.get_str() + " != 1 (n=" + std::to_string(n) +
                                     ", " + variant_name(variant) + ")");
            }
        }
        return "char = 1 at 20 seeded points and dim = 1, n=3,4,5, all variants";
    });

    // 4. singular d-table
    criterion(4, "singular d-table", 0, [] {
        for (int n : {3, 4, 5, 6}) {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k) {
                        if (i == j || j == k || i == k) continue;
                        auto dm = d_matrix(singular_tabloid(i, j, k, n));
                        for (int a = 1; a <= n; ++a)
                            for (int b = 1; b <= n; ++b) {
                                int expected = 0;
                                if (a == i && b == j) expected = 3;
                                else if (a == j && b == k) expected = 3;
                                else if (a == i && b == k) expected = 1;
                                else if ((a == i || a == j || a == k) && b != i && b != j && b != k)
                                    expected = 1;
                                expect(dm[a - 1][b - 1] == expected,
                                       "d-table mismatch at n=" + std::to_string(n));
                            }
                    }
            for (const auto& tab : enumerate_tabloids(n)) {
                auto dm = d_matrix(tab);
                long total = 0;
                for (const auto& row : dm) total += std::accumulate(row.begin(), row.end(), 0L);
                long expected =
                    classify(tab).kind == TabloidKind::Singular ? 3L * n - 2 : 3L * n - 3;
                expect(total == expected, "eigenvector total mismatch at n=" + std::to_string(n));
            }
        }
        return "degenerate-point table and 3n-3 / 3n-2 totals, n=3..6";
    });

    // 5. variant equality + perturbation
    criterion(5, "variant equality", 0, [] {
        Diagram3 trivial;
        for (int n : {3, 4}) {
            for (auto [i, j, k] : {std::array<int, 3>{1, 2, 3}, {2, 4, 1}}) {
                if (std::max({i, j, k}) > n) continue;
                std::vector<Exponents> avoid;
                for (Variant variant : {Variant::Simplified, Variant::SS, Variant::FM})
                    for (const auto& term : contribution_singular(i, j, k, n, trivial, variant))
                        for (const auto& [v, mult] : term.denominator) avoid.push_back(v);
                CharacterSum identity = character_sum(trivial, n, Variant::SS);
                for (const auto& v : pole_characters(identity)) avoid.push_back(v);
                for (int a = 1; a <= n; ++a)
                    for (int b = 1; b <= n; ++b)
                        for (int c = 1; c <= n; ++c) {
                            if (a == b || b == c || a == c) continue;
                            Exponents v(n, 0);
                            v[a - 1] += 1;
                            v[c - 1] += 2;
                            v[b - 1] -= 3;
                            avoid.push_back(v);
                        }
                auto points = random_points(n, 10, 77, avoid);
                VariantEqualityReport report = verify_variant_equality(i, j, k, trivial, n, points);
                expect(report.all_equal, report.detail);
                expect(report.perturbation_detected,
                       "perturbation check failed: " + report.detail);
            }
        }
        return "simplified = ss = fm at 10 seeded points; perturbed special character breaks "
               "the identity";
    });

    // 6. oracle equivalence
    criterion(6, "oracle equivalence", 300.0, [] {
        int compared = 0;
        for (const Diagram3& d : builtin_corpus()) {
            for (int n : {3, 4}) {
                if (n == 4 && d.total_boxes() > 6) continue;
                WeightCharacter brute = schur_module_character(diagram_columns(d), n);
                WeightCharacter expanded = expand_character(character_sum(d, n));
                expect(expanded == brute,
                       "character mismatch for m=" + format_diagram(d) + " at n=" + std::to_string(n));
                expect(dimension(d, n) == brute.dimension(),
                       "dimension mismatch for m=" + format_diagram(d) + " at n=" + std::to_string(n));
                check_character_sanity(expanded, d, "m=" + format_diagram(d));
                ++compared;
            }
        }
        return std::to_string(compared) + " diagram/rank pairs match the brute-force module";
    });

    // 7. Weyl agreement
    criterion(7, "weyl agreement", 0, [] {
        bool saw_adjoint = false;
        for (const Partition3& lambda : partitions_up_to_four()) {
            Diagram3 d = young_diagram(lambda);
            for (int n : {3, 4, 5}) {
                Integer weyl = weyl_dimension(lambda, n);
                expect(dimension(d, n) == weyl,
                       "dimension mismatch for lambda=(" + std::to_string(lambda.lambda[0]) + "," +
                           std::to_string(lambda.lambda[1]) + "," +
                           std::to_string(lambda.lambda[2]) + ") at n=" + std::to_string(n));
                if (n <= 4) {
                    WeightCharacter expanded = expand_character(character_sum(d, n));
                    expect(expanded == schur_polynomial(lambda, n),
                           "schur polynomial mismatch at n=" + std::to_string(n));
                    check_character_sanity(expanded, d, "young diagram");
                }
                if (lambda.lambda == std::array<long, 3>{2, 1, 0} && n == 3) {
                    expect(weyl == 8, "dim S_(2,1,0) != 8 at n=3");
                    saw_adjoint = true;
                }
            }
        }
        expect(saw_adjoint, "lambda=(2,1,0) was not covered");
        return "all 35 partitions with lambda_1 <= 4 at n=3..5, including dim S_(2,1,0) = 8";
    });

    // 8. cross-path dimension
    criterion(8, "cross-path dimension", 0, [] {
        int compared = 0;
        for (const Diagram3& d : builtin_corpus()) {
            for (int n : {3, 4, 5}) {
                LaurentPolynomial q = specialize_q(character_sum(d, n));
                Rational at_one = eval_at_one(q);
                Integer dim = dimension(d, n);
                expect(at_one == Rational(dim),
                       "q-specialization value " + to_string(at_one) + " != dimension " +
                           dim.get_str() + " for m=" + format_diagram(d) +
                           " at n=" + std::to_string(n));
                ++compared;
            }
        }
        return std::to_string(compared) + " corpus/rank pairs agree through q=1";
    });

    // 9. character sanity
    criterion(9, "character sanity", 0, [] {
        int checked = 0;
        for (const Diagram3& d : builtin_corpus()) {
            for (int n : {3, 4}) {
                WeightCharacter wc = expand_character(character_sum(d, n));
                check_character_sanity(wc, d, "m=" + format_diagram(d));
                ++checked;
            }
        }
        // a couple of larger non-Young cases
        for (const char* text : {"0,1,0,2,1,0,1", "1,1,0,0,0,2,1"}) {
            Diagram3 d = parse_diagram(text);
            WeightCharacter wc = expand_character(character_sum(d, 3));
            check_character_sanity(wc, d, std::string("m=") + text);
            ++checked;
        }
        return std::to_string(checked) +
               " expanded characters are symmetric, homogeneous, nonnegative";
    });

    if (failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
