#include "schur3/tabloid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schur3 {

namespace {

void require_rank(int n) {
    if (n < 3) throw std::invalid_argument("rank n must be at least 3");
}

void require_distinct(int i, int j, int k, int n) {
    if (i == j || j == k || i == k) throw std::invalid_argument("indices i,j,k must be distinct");
    for (int v : {i, j, k})
        if (v < 1 || v > n) throw std::invalid_argument("index outside [1,n]");
}

// Character exponent vector of x_a^{-1} x_b.
Exponents root_character(int a, int b, int n) {
    Exponents e(n, 0);
    e[a - 1] -= 1;
    e[b - 1] += 1;
    return e;
}

}  // namespace

unsigned Tabloid::label_mask(int type) const {
    auto bit = [](int label) { return 1u << (label - 1); };
    switch (type) {
        case 0: return bit(points[0]);
        case 1: return bit(points[1]);
        case 2: return bit(points[2]);
        case 3: return bit(pairs[0][0]) | bit(pairs[0][1]);
        case 4: return bit(pairs[1][0]) | bit(pairs[1][1]);
        case 5: return bit(pairs[2][0]) | bit(pairs[2][1]);
        case 6: return bit(triple[0]) | bit(triple[1]) | bit(triple[2]);
        default: throw std::invalid_argument("bad column type");
    }
}

std::vector<Tabloid> enumerate_tabloids(int n) {
    require_rank(n);
    std::vector<Tabloid> out;
    // Triples t, then the three pair labels inside t, then points inside
    // the two pairs each point belongs to.
    std::vector<std::array<int, 3>> triples;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) triples.push_back({a, b, c});

    for (const auto& t : triples) {
        std::array<std::array<int, 2>, 3> sub2 = {{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
        for (const auto& e12 : sub2)
            for (const auto& e23 : sub2)
                for (const auto& e13 : sub2)
                    for (int p1 : e12) {
                        if (p1 != e13[0] && p1 != e13[1]) continue;
                        for (int p2 : e12) {
                            if (p2 != e23[0] && p2 != e23[1]) continue;
                            for (int p3 : e23) {
                                if (p3 != e13[0] && p3 != e13[1]) continue;
                                Tabloid tab;
                                tab.n = n;
                                tab.points = {p1, p2, p3};
                                tab.pairs = {e12, e23, e13};
                                tab.triple = t;
                                out.push_back(tab);
                            }
                        }
                    }
    }
    return out;
}

Tabloid singular_tabloid(int i, int j, int k, int n) {
    require_rank(n);
    require_distinct(i, j, k, n);
    Tabloid tab;
    tab.n = n;
    tab.points = {i, i, i};
    std::array<int, 2> pair = {std::min(i, j), std::max(i, j)};
    tab.pairs = {pair, pair, pair};
    tab.triple = {i, j, k};
    std::sort(tab.triple.begin(), tab.triple.end());
    return tab;
}

std::vector<std::vector<int>> d_matrix(const Tabloid& tab) {
    const int n = tab.n;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, 0));
    std::array<unsigned, kNumColumnTypes> labels;
    for (int t = 0; t < kNumColumnTypes; ++t) labels[t] = tab.label_mask(t);

    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            // columns whose label set contains a but not b
            std::vector<int> verts;
            for (int t = 0; t < kNumColumnTypes; ++t) {
                unsigned L = labels[t];
                if ((L & (1u << (a - 1))) && !(L & (1u << (b - 1)))) verts.push_back(t);
            }
            if (verts.empty()) continue;
            // connected components under inclusion of column types
            std::vector<int> comp(verts.size(), -1);
            int ncomp = 0;
            for (std::size_t s = 0; s < verts.size(); ++s) {
                if (comp[s] != -1) continue;
                comp[s] = ncomp;
                std::vector<std::size_t> stack = {s};
                while (!stack.empty()) {
                    std::size_t u = stack.back();
                    stack.pop_back();
                    unsigned mu = kColumnMasks[verts[u]];
                    for (std::size_t v = 0; v < verts.size(); ++v) {
                        if (comp[v] != -1) continue;
                        unsigned mv = kColumnMasks[verts[v]];
                        if ((mu & mv) == mu || (mu & mv) == mv) {
                            comp[v] = ncomp;
                            stack.push_back(v);
                        }
                    }
                }
                ++ncomp;
            }
            d[a - 1][b - 1] = ncomp;
        }
    }
    return d;
}

TabloidClass classify(const Tabloid& tab) {
    TabloidClass cls;
    bool degenerate = tab.points[0] == tab.points[1] && tab.points[1] == tab.points[2] &&
                      tab.pairs[0] == tab.pairs[1] && tab.pairs[1] == tab.pairs[2];
    if (!degenerate) return cls;
    cls.kind = TabloidKind::Singular;
    int i = tab.points[0];
    int j = tab.pairs[0][0] == i ? tab.pairs[0][1] : tab.pairs[0][0];
    int k = 0;
    for (int v : tab.triple)
        if (v != i && v != j) k = v;
    cls.ijk = {i, j, k};
    return cls;
}

Exponents weight(const Tabloid& tab, const Diagram3& d) {
    Exponents w(tab.n, 0);
    for (int t = 0; t < kNumColumnTypes; ++t) {
        if (d.m[t] == 0) continue;
        unsigned L = tab.label_mask(t);
        for (int a = 1; a <= tab.n; ++a)
            if (L & (1u << (a - 1))) w[a - 1] += static_cast<int>(d.m[t]);
    }
    return w;
}

long b_value(const Tabloid& tab, const Diagram3& d) {
    Exponents w = weight(tab, d);
    long total = 0;
    for (int a = 1; a <= tab.n; ++a) total += static_cast<long>(w[a - 1]) * a;
    return total;
}

std::vector<long> r_multiset(const Tabloid& tab) {
    if (classify(tab).kind != TabloidKind::Smooth)
        throw std::invalid_argument("r_multiset is defined only at smooth tabloids");
    auto d = d_matrix(tab);
    std::vector<long> r;
    for (int a = 1; a <= tab.n; ++a)
        for (int b = 1; b <= tab.n; ++b)
            for (int c = 0; c < d[a - 1][b - 1]; ++c) r.push_back(a - b);
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<long> r_prime(int i, int j, int k, int n) {
    require_distinct(i, j, k, n);
    std::vector<long> r;
    for (int l = 1; l <= n; ++l) {
        if (l == i || l == j || l == k) continue;
        r.push_back(i - l);
        r.push_back(j - l);
        r.push_back(k - l);
    }
    std::sort(r.begin(), r.end());
    return r;
}

namespace {

void append_outside_terms(std::vector<EigenDatum>& list, int i, int j, int k, int n) {
    for (int l = 1; l <= n; ++l) {
        if (l == i || l == j || l == k) continue;
        list.push_back({root_character(i, l, n), 0});
        list.push_back({root_character(j, l, n), 0});
        list.push_back({root_character(k, l, n), 0});
    }
}

}  // namespace

SSFixedPointData ss_eigenvalues(int i, int j, int k, int n) {
    require_distinct(i, j, k, n);
    SSFixedPointData data;

    // eta: x_j^2 / (x_i x_k), x_j/x_i, x_k/x_i, x_k/x_j three times
    {
        Exponents special(n, 0);
        special[j - 1] += 2;
        special[i - 1] -= 1;
        special[k - 1] -= 1;
        data.eta.push_back({special, 0});
        data.eta.push_back({root_character(i, j, n), 0});
        data.eta.push_back({root_character(i, k, n), 0});
        for (int c = 0; c < 3; ++c) data.eta.push_back({root_character(j, k, n), 0});
        append_outside_terms(data.eta, i, j, k, n);
    }

    // zeta: x_i x_k / x_j^2, x_j/x_i three times, x_k/x_i, x_k/x_j
    {
        Exponents special(n, 0);
        special[i - 1] += 1;
        special[k - 1] += 1;
        special[j - 1] -= 2;
        data.zeta.push_back({special, 0});
        for (int c = 0; c < 3; ++c) data.zeta.push_back({root_character(i, j, n), 0});
        data.zeta.push_back({root_character(i, k, n), 0});
        data.zeta.push_back({root_character(j, k, n), 0});
        append_outside_terms(data.zeta, i, j, k, n);
    }
    return data;
}

std::vector<EigenDatum> fm_normal_bundle(int i, int j, int k, int n) {
    require_distinct(i, j, k, n);
    std::vector<EigenDatum> bundle;
    bundle.push_back({root_character(i, j, n), -1});
    bundle.push_back({root_character(j, k, n), -1});
    bundle.push_back({root_character(j, k, n), 0});
    bundle.push_back({root_character(i, j, n), 0});
    bundle.push_back({root_character(j, k, n), 0});
    append_outside_terms(bundle, i, j, k, n);
    return bundle;
}

nlohmann::json tabloid_to_json(const Tabloid& tab) {
    nlohmann::json j;
    j["p"] = tab.points;
    j["e12"] = tab.pairs[0];
    j["e23"] = tab.pairs[1];
    j["e13"] = tab.pairs[2];
    j["t"] = tab.triple;
    TabloidClass cls = classify(tab);
    if (cls.kind == TabloidKind::Singular) {
        j["class"] = "singular";
        j["ijk"] = cls.ijk;
    } else {
        j["class"] = "smooth";
    }
    return j;
}

Tabloid tabloid_from_json(const nlohmann::json& j, int n) {
    require_rank(n);
    Tabloid tab;
    tab.n = n;
    tab.points = j.at("p").get<std::array<int, 3>>();
    tab.pairs[0] = j.at("e12").get<std::array<int, 2>>();
    tab.pairs[1] = j.at("e23").get<std::array<int, 2>>();
    tab.pairs[2] = j.at("e13").get<std::array<int, 2>>();
    tab.triple = j.at("t").get<std::array<int, 3>>();
    for (auto& pair : tab.pairs) std::sort(pair.begin(), pair.end());
    std::sort(tab.triple.begin(), tab.triple.end());
    return tab;
}

std::string tabloid_brief(const Tabloid& tab) {
    std::ostringstream out;
    out << "p=(" << tab.points[0] << "," << tab.points[1] << "," << tab.points[2] << ")";
    out << " e12={" << tab.pairs[0][0] << "," << tab.pairs[0][1] << "}";
    out << " e23={" << tab.pairs[1][0] << "," << tab.pairs[1][1] << "}";
    out << " e13={" << tab.pairs[2][0] << "," << tab.pairs[2][1] << "}";
    out << " t={" << tab.triple[0] << "," << tab.triple[1] << "," << tab.triple[2] << "}";
    return out.str();
}

}  // namespace schur3
