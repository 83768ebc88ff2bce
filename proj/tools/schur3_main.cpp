// Command-line front end: tabloid enumeration, character and dimension
// computation, and the verification suites.

#include <algorithm>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schur3/character.hpp"
#include "schur3/corpus.hpp"
#include "schur3/diagram.hpp"
#include "schur3/dimension.hpp"
#include "schur3/oracle.hpp"
#include "schur3/points.hpp"
#include "schur3/series.hpp"
#include "schur3/tabloid.hpp"

using nlohmann::json;
using namespace schur3;

namespace {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunReport {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    std::vector<Check> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }

    json to_json() const {
        json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["outputs"] = outputs;
        j["checks"] = json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"},
                                   {"detail", c.detail}});
        return j;
    }
};

void print_report_text(const RunReport& report) {
    for (auto it = report.outputs.begin(); it != report.outputs.end(); ++it)
        std::cout << it.key() << ": "
                  << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                  << "\n";
    for (const auto& c : report.checks)
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name
                  << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
}

int finish(const RunReport& report, bool json_mode) {
    if (json_mode)
        std::cout << report.to_json().dump(2) << "\n";
    else
        print_report_text(report);
    return report.all_pass() ? 0 : 1;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) out.push_back(std::stoi(field));
    return out;
}

std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> out;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) out.push_back(parse_rational(field));
    return out;
}

json point_to_json(const std::vector<Rational>& point) {
    json j = json::array();
    for (const auto& x : point) j.push_back(to_string(x));
    return j;
}

json expanded_to_json(const WeightCharacter& wc) {
    json j = json::array();
    for (const auto& [e, mult] : wc.entries) j.push_back({{"exponent", e}, {"coeff", mult}});
    return j;
}

// ---------------------------------------------------------------- tabloids

int cmd_tabloids(int n, bool json_mode) {
    auto tabloids = enumerate_tabloids(n);
    long singular = 0;
    if (json_mode) {
        json arr = json::array();
        for (const auto& tab : tabloids) {
            json j = tabloid_to_json(tab);
            auto dm = d_matrix(tab);
            long total = 0;
            for (const auto& row : dm) total += std::accumulate(row.begin(), row.end(), 0L);
            j["d_total"] = total;
            arr.push_back(std::move(j));
            if (classify(tab).kind == TabloidKind::Singular) ++singular;
        }
        json out;
        out["n"] = n;
        out["count"] = tabloids.size();
        out["singular_count"] = singular;
        out["tabloids"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& tab : tabloids) {
        TabloidClass cls = classify(tab);
        auto dm = d_matrix(tab);
        long total = 0;
        for (const auto& row : dm) total += std::accumulate(row.begin(), row.end(), 0L);
        std::cout << tabloid_brief(tab) << "  "
                  << (cls.kind == TabloidKind::Singular ? "singular" : "smooth  ")
                  << "  sum(d)=" << total << "\n";
        if (cls.kind == TabloidKind::Singular) ++singular;
    }
    std::cout << "total " << tabloids.size() << " tabloids (" << singular << " singular)\n";
    return 0;
}

// --------------------------------------------------------------- character

int cmd_character(const std::string& m_text, int n, const std::string& variant_text,
                  const std::string& eval_text, bool q_mode, const std::string& q_exps,
                  bool expand_mode, bool json_mode) {
    RunReport report;
    report.command = "character";
    Diagram3 d = parse_diagram(m_text);
    Variant variant = parse_variant(variant_text);
    report.inputs = {{"m", m_text}, {"n", n}, {"variant", variant_name(variant)}};

    CharacterSum cs = character_sum(d, n, variant);

    if (!eval_text.empty()) {
        auto point = parse_point(eval_text);
        Rational value = evaluate_character(cs, point);
        report.outputs["evaluations"] = json::array(
            {{{"point", point_to_json(point)}, {"value", to_string(value)}}});
        report.outputs["value"] = to_string(value);
    } else if (q_mode) {
        std::vector<int> exps;
        if (!q_exps.empty()) exps = parse_int_list(q_exps);
        LaurentPolynomial q = specialize_q(cs, exps);
        report.outputs["q_polynomial"] = q.str({"q"});
        report.outputs["dimension_at_q1"] = to_string(eval_at_one(q));
    } else if (expand_mode) {
        WeightCharacter wc = expand_character(cs);
        report.outputs["expanded"] = expanded_to_json(wc);
        report.outputs["character"] = format_weight_character(wc);
        report.outputs["dimension"] = wc.dimension();
    } else {
        throw CLI::ValidationError("character", "choose one of --eval, --q, --expand");
    }
    return finish(report, json_mode);
}

// --------------------------------------------------------------- dimension

int cmd_dimension(const std::string& m_text, int n, const std::string& variant_text,
                  bool per_tabloid, bool json_mode) {
    RunReport report;
    report.command = "dimension";
    Diagram3 d = parse_diagram(m_text);
    Variant variant = parse_variant(variant_text);
    report.inputs = {{"m", m_text}, {"n", n}, {"variant", variant_name(variant)}};

    if (per_tabloid) {
        DimensionBreakdown breakdown = dimension_breakdown(d, n, variant);
        report.outputs["dimension"] = breakdown.value.get_str();
        json arr = json::array();
        for (const auto& c : breakdown.contributions)
            arr.push_back({{"tabloid", c.origin}, {"value", to_string(c.value)}});
        report.outputs["per_tabloid"] = std::move(arr);
    } else {
        report.outputs["dimension"] = dimension(d, n, variant).get_str();
    }
    return finish(report, json_mode);
}

// ------------------------------------------------------------------ verify

void check_identity_suite(RunReport& report, int n, std::uint64_t seed) {
    Diagram3 trivial;
    for (Variant variant : {Variant::Simplified, Variant::SS, Variant::FM}) {
        CharacterSum cs = character_sum(trivial, n, variant);
        auto points = random_points(n, 20, seed, pole_characters(cs));
        int good = 0;
        std::string detail;
        for (const auto& point : points) {
            Rational value = evaluate_character(cs, point);
            if (value == 1) {
                ++good;
            } else if (detail.empty()) {
                std::ostringstream msg;
                msg << "value " << to_string(value) << " at " << point_to_json(point).dump();
                detail = msg.str();
            }
        }
        Check c;
        c.name = "identity char = 1 (" + variant_name(variant) + ", n=" + std::to_string(n) + ")";
        c.pass = good == static_cast<int>(points.size());
        c.detail = c.pass ? std::to_string(good) + "/20 points" : detail;
        report.checks.push_back(std::move(c));
    }
    for (Variant variant : {Variant::Simplified, Variant::SS}) {
        Integer value = dimension(trivial, n, variant);
        Check c;
        c.name = "identity dim = 1 (" + variant_name(variant) + ", n=" + std::to_string(n) + ")";
        c.pass = value == 1;
        c.detail = "dimension " + value.get_str();
        report.checks.push_back(std::move(c));
    }
}

void check_variants_suite(RunReport& report, const Diagram3& d, int n, std::uint64_t seed) {
    std::vector<std::array<int, 3>> triples = {{1, 2, 3}, {2, 4, 1}};
    for (const auto& [i, j, k] : triples) {
        if (std::max({i, j, k}) > n) continue;
        // avoid the poles of all three variants and of the perturbed sum
        std::vector<Exponents> avoid;
        for (Variant variant : {Variant::Simplified, Variant::SS, Variant::FM})
            for (const auto& term : contribution_singular(i, j, k, n, d, variant))
                for (const auto& [v, mult] : term.denominator) avoid.push_back(v);
        {
            CharacterSum identity = character_sum(Diagram3{}, n, Variant::SS);
            for (const auto& v : pole_characters(identity)) avoid.push_back(v);
            Exponents perturbed(n, 0);
            // every singular triple (a,b,c) contributes x_a x_c^2 x_b^-3
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
        }
        auto points = random_points(n, 10, seed, avoid);
        VariantEqualityReport result = verify_variant_equality(i, j, k, d, n, points);
        std::ostringstream name;
        name << "variant equality (" << i << "," << j << "," << k << ") n=" << n;
        Check c;
        c.name = name.str();
        c.pass = result.all_equal;
        c.detail = result.all_equal ? std::to_string(points.size()) + " points agree" : result.detail;
        report.checks.push_back(std::move(c));

        Check p;
        p.name = "perturbation breaks identity (" + std::to_string(i) + "," + std::to_string(j) +
                 "," + std::to_string(k) + ") n=" + std::to_string(n);
        p.pass = result.perturbation_detected;
        p.detail = result.perturbation_detected ? "perturbed sum != 1 at all usable points"
                                                : result.detail;
        report.checks.push_back(std::move(p));
    }
}

void check_oracle_suite(RunReport& report, int n) {
    for (const Diagram3& d : builtin_corpus()) {
        GeneralDiagram gd = diagram_columns(d);
        Check c;
        c.name = "oracle match m=" + format_diagram(d) + " n=" + std::to_string(n);
        try {
            WeightCharacter expected = schur_module_character(gd, n);
            WeightCharacter actual = expand_character(character_sum(d, n));
            Integer dim_formula = dimension(d, n);
            bool char_ok = expected == actual;
            bool dim_ok = dim_formula == expected.dimension();
            c.pass = char_ok && dim_ok;
            std::ostringstream detail;
            detail << "dim " << dim_formula.get_str() << (char_ok ? ", character match" : ", CHARACTER MISMATCH")
                   << (dim_ok ? "" : ", DIMENSION MISMATCH");
            c.detail = detail.str();
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        report.checks.push_back(std::move(c));
    }
}

void check_weyl_suite(RunReport& report, int n) {
    for (long l1 = 0; l1 <= 4; ++l1)
        for (long l2 = 0; l2 <= l1; ++l2)
            for (long l3 = 0; l3 <= l2; ++l3) {
                Partition3 lambda{{l1, l2, l3}};
                Diagram3 d;
                d.m[0] = l1 - l2;
                d.m[3] = l2 - l3;
                d.m[6] = l3;
                std::ostringstream name;
                name << "weyl (" << l1 << "," << l2 << "," << l3 << ") n=" << n;
                Check c;
                c.name = name.str();
                try {
                    Integer weyl = weyl_dimension(lambda, n);
                    Integer dim = dimension(d, n);
                    bool dim_ok = weyl == dim;
                    bool char_ok = true;
                    if (n <= 4)
                        char_ok = expand_character(character_sum(d, n)) == schur_polynomial(lambda, n);
                    c.pass = dim_ok && char_ok;
                    c.detail = "dim " + dim.get_str() + (dim_ok ? "" : " != weyl " + weyl.get_str()) +
                               (char_ok ? "" : ", schur polynomial mismatch");
                } catch (const std::exception& e) {
                    c.pass = false;
                    c.detail = e.what();
                }
                report.checks.push_back(std::move(c));
            }
}

void check_geometry_suite(RunReport& report, int n) {
    auto tabloids = enumerate_tabloids(n);
    {
        Check c;
        c.name = "tabloid count n=" + std::to_string(n);
        long expected = 11L * n * (n - 1) * (n - 2);
        c.pass = static_cast<long>(tabloids.size()) == expected;
        c.detail = std::to_string(tabloids.size()) + " of " + std::to_string(expected);
        report.checks.push_back(std::move(c));
    }
    {
        Check c;
        c.name = "eigenvector totals n=" + std::to_string(n);
        c.pass = true;
        for (const auto& tab : tabloids) {
            auto dm = d_matrix(tab);
            long total = 0;
            for (const auto& row : dm) total += std::accumulate(row.begin(), row.end(), 0L);
            long expected = classify(tab).kind == TabloidKind::Singular ? 3L * n - 2 : 3L * n - 3;
            if (total != expected) {
                c.pass = false;
                c.detail = "sum(d)=" + std::to_string(total) + " at " + tabloid_brief(tab);
                break;
            }
        }
        if (c.pass) c.detail = "sum(d) = 3n-3 smooth / 3n-2 singular over all tabloids";
        report.checks.push_back(std::move(c));
    }
    {
        Check c;
        c.name = "singular d-table n=" + std::to_string(n);
        c.pass = true;
        for (int i = 1; i <= n && c.pass; ++i)
            for (int j = 1; j <= n && c.pass; ++j)
                for (int k = 1; k <= n && c.pass; ++k) {
                    if (i == j || j == k || i == k) continue;
                    auto dm = d_matrix(singular_tabloid(i, j, k, n));
                    for (int a = 1; a <= n && c.pass; ++a)
                        for (int b = 1; b <= n; ++b) {
                            int expected = 0;
                            if (a == i && b == j) expected = 3;
                            else if (a == j && b == k) expected = 3;
                            else if (a == i && b == k) expected = 1;
                            else if ((a == i || a == j || a == k) && b != i && b != j && b != k)
                                expected = 1;
                            if (dm[a - 1][b - 1] != expected) {
                                c.pass = false;
                                std::ostringstream detail;
                                detail << "d[" << a << "][" << b << "]=" << dm[a - 1][b - 1]
                                       << " expected " << expected << " at (" << i << "," << j
                                       << "," << k << ")";
                                c.detail = detail.str();
                                break;
                            }
                        }
                }
        if (c.pass) c.detail = "all distinct triples match the degenerate-point table";
        report.checks.push_back(std::move(c));
    }
    {
        Check c;
        c.name = "resolved eigenvalue lists n=" + std::to_string(n);
        c.pass = true;
        Diagram3 trivial;
        for (int i = 1; i <= n && c.pass; ++i)
            for (int j = 1; j <= n && c.pass; ++j)
                for (int k = 1; k <= n && c.pass; ++k) {
                    if (i == j || j == k || i == k) continue;
                    SSFixedPointData ss = ss_eigenvalues(i, j, k, n);
                    if (static_cast<long>(ss.eta.size()) != 3L * n - 3 ||
                        static_cast<long>(ss.zeta.size()) != 3L * n - 3) {
                        c.pass = false;
                        c.detail = "eigenvalue list size != 3n-3";
                        break;
                    }
                    auto terms = contribution_singular(i, j, k, n, trivial, Variant::SS);
                    for (auto [list, term] : {std::pair{&ss.zeta, &terms[0]}, std::pair{&ss.eta, &terms[1]}}) {
                        std::map<Exponents, int> counted;
                        for (const auto& eigen : *list) counted[eigen.character] += 1;
                        if (counted != term->denominator) {
                            c.pass = false;
                            c.detail = "eigenvalue list does not match contribution denominator";
                        }
                    }
                    auto bundle = fm_normal_bundle(i, j, k, n);
                    if (static_cast<long>(bundle.size()) != 3L * n - 4) {
                        c.pass = false;
                        c.detail = "normal bundle summand count != 3n-4";
                        break;
                    }
                    int twisted = 0;
                    for (const auto& s : bundle) {
                        if (s.chern == -1) ++twisted;
                        else if (s.chern != 0) { c.pass = false; c.detail = "unexpected Chern class"; }
                    }
                    if (twisted != 2) {
                        c.pass = false;
                        c.detail = "expected exactly two Chern class -1 summands";
                    }
                }
        if (c.pass) c.detail = "SS lists and FM bundle data consistent for all triples";
        report.checks.push_back(std::move(c));
    }
}

int cmd_verify(const std::string& suite, int n, const std::string& m_text, std::uint64_t seed,
               bool json_mode) {
    RunReport report;
    report.command = "verify";
    report.inputs = {{"suite", suite}, {"n", n}, {"m", m_text}, {"seed", seed}};
    Diagram3 d = parse_diagram(m_text);

    if (suite == "identity") {
        check_identity_suite(report, n, seed);
    } else if (suite == "variants") {
        check_variants_suite(report, d, n, seed);
    } else if (suite == "oracle") {
        check_oracle_suite(report, n);
    } else if (suite == "weyl") {
        check_weyl_suite(report, n);
    } else if (suite == "geometry") {
        check_geometry_suite(report, n);
    } else {
        throw CLI::ValidationError("verify", "unknown suite: " + suite);
    }
    return finish(report, json_mode);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters and dimensions of three-row generalized Schur modules "
                 "via torus fixed-point sums"};
    app.require_subcommand(1);

    // tabloids
    auto* tabloids = app.add_subcommand("tabloids", "enumerate torus-fixed points");
    int tab_n = 3;
    bool tab_json = false;
    tabloids->add_option("--n", tab_n, "rank n (>= 3)")->required()->check(CLI::Range(3, 64));
    tabloids->add_flag("--json", tab_json, "machine-readable output");

    // character
    auto* character = app.add_subcommand("character", "fixed-point character sum");
    std::string ch_m, ch_variant = "simplified", ch_eval, ch_qexps;
    int ch_n = 3;
    bool ch_q = false, ch_expand = false, ch_json = false;
    character->add_option("--m", ch_m, "7 comma-separated column multiplicities")->required();
    character->add_option("--n", ch_n, "rank n (>= 3)")->required()->check(CLI::Range(3, 64));
    character->add_option("--variant", ch_variant, "simplified | ss | fm");
    auto* opt_eval = character->add_option("--eval", ch_eval, "evaluate at a rational point p1,p2,...");
    auto* opt_q = character->add_flag("--q", ch_q, "principal q-specialization");
    character->add_option("--q-exponents", ch_qexps, "custom specialization exponents");
    auto* opt_expand = character->add_flag("--expand", ch_expand, "expand to the character polynomial");
    character->add_flag("--json", ch_json, "machine-readable output");
    opt_eval->excludes(opt_q)->excludes(opt_expand);
    opt_q->excludes(opt_expand);

    // dimension
    auto* dim = app.add_subcommand("dimension", "fixed-point dimension sum");
    std::string dm_m, dm_variant = "simplified";
    int dm_n = 3;
    bool dm_per_tabloid = false, dm_json = false;
    dim->add_option("--m", dm_m, "7 comma-separated column multiplicities")->required();
    dim->add_option("--n", dm_n, "rank n (>= 3)")->required()->check(CLI::Range(3, 64));
    dim->add_option("--variant", dm_variant, "simplified | ss");
    dim->add_flag("--per-tabloid", dm_per_tabloid, "list the per-tabloid terms");
    dim->add_flag("--json", dm_json, "machine-readable output");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string vf_suite, vf_m = "0,0,0,0,0,0,0";
    int vf_n = 3;
    std::uint64_t vf_seed = 1;
    bool vf_json = false;
    verify->add_option("--suite", vf_suite, "identity | variants | oracle | weyl | geometry")
        ->required();
    verify->add_option("--n", vf_n, "rank n (>= 3)")->check(CLI::Range(3, 64));
    verify->add_option("--m", vf_m, "diagram for the variants suite");
    verify->add_option("--seed", vf_seed, "random point seed");
    verify->add_flag("--json", vf_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tabloids->parsed()) return cmd_tabloids(tab_n, tab_json);
        if (character->parsed())
            return cmd_character(ch_m, ch_n, ch_variant, ch_eval, ch_q, ch_qexps, ch_expand,
                                 ch_json);
        if (dim->parsed()) return cmd_dimension(dm_m, dm_n, dm_variant, dm_per_tabloid, dm_json);
        if (verify->parsed()) return cmd_verify(vf_suite, vf_n, vf_m, vf_seed, vf_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
