#include "schur3/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schur3 {

long GeneralDiagram::square_count() const {
    long total = 0;
    for (unsigned c : columns) total += std::popcount(c);
    return total;
}

GeneralDiagram parse_general_diagram(std::string_view text) {
    GeneralDiagram gd;
    if (text.empty()) return gd;
    std::string s(text);
    std::istringstream in(s);
    std::string column;
    while (std::getline(in, column, ';')) {
        std::istringstream cin(column);
        std::string field;
        unsigned mask = 0;
        while (std::getline(cin, field, ',')) {
            std::size_t pos = 0;
            long row = std::stol(field, &pos);
            if (pos != field.size() || row < 1 || row > 3)
                throw std::invalid_argument("bad row index in column: " + column);
            mask |= 1u << (row - 1);
        }
        if (mask == 0) throw std::invalid_argument("empty column");
        gd.columns.push_back(mask);
    }
    return gd;
}

std::string format_general_diagram(const GeneralDiagram& gd) {
    std::string s;
    for (std::size_t c = 0; c < gd.columns.size(); ++c) {
        if (c) s += ";";
        bool first = true;
        for (int row = 1; row <= 3; ++row) {
            if (!(gd.columns[c] & (1u << (row - 1)))) continue;
            if (!first) s += ",";
            first = false;
            s += std::to_string(row);
        }
    }
    return s;
}

GeneralDiagram diagram_columns(const Diagram3& d) {
    GeneralDiagram gd;
    for (int t = 0; t < kNumColumnTypes; ++t)
        for (long c = 0; c < d.m[t]; ++c) gd.columns.push_back(kColumnMasks[t]);
    return gd;
}

OracleLimits::OracleLimits() : max_squares(8), max_rank(4) {
    if (const char* env = std::getenv("SCHUR_MAX_SQUARES")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) max_squares = v;
    }
}

namespace {

using Perm = std::vector<int>;  // perm[t] = image of square t

// All elements of the direct product of symmetric groups on the given
// square classes, with signs.
std::vector<std::pair<Perm, int>> class_group(int square_count,
                                              const std::vector<std::vector<int>>& classes) {
    std::vector<std::pair<Perm, int>> out;
    Perm identity(square_count);
    std::iota(identity.begin(), identity.end(), 0);
    out.emplace_back(identity, 1);
    for (const auto& cls : classes) {
        if (cls.size() < 2) continue;
        // all permutations of this class, as (arrangement, sign)
        std::vector<std::pair<std::vector<int>, int>> arrangements;
        std::vector<int> arr = cls;
        std::sort(arr.begin(), arr.end());
        do {
            int sign = 1;
            for (std::size_t a = 0; a < arr.size(); ++a)
                for (std::size_t b = a + 1; b < arr.size(); ++b)
                    if (arr[a] > arr[b]) sign = -sign;
            arrangements.emplace_back(arr, sign);
        } while (std::next_permutation(arr.begin(), arr.end()));

        std::vector<std::pair<Perm, int>> next;
        next.reserve(out.size() * arrangements.size());
        for (const auto& [base, base_sign] : out) {
            for (const auto& [target, sign] : arrangements) {
                Perm p = base;
                for (std::size_t a = 0; a < cls.size(); ++a) p[cls[a]] = base[target[a]];
                next.emplace_back(std::move(p), base_sign * sign);
            }
        }
        out = std::move(next);
    }
    return out;
}

// Fraction-free Gaussian elimination (Bareiss) with full pivoting.
long rank_bareiss(std::vector<std::vector<Integer>> a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    Integer prev = 1;
    int rank = 0;
    while (rank < std::min(rows, cols)) {
        int pr = -1, pc = -1;
        for (int r = rank; r < rows && pr < 0; ++r)
            for (int c = rank; c < cols; ++c)
                if (a[r][c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        std::swap(a[rank], a[pr]);
        if (pc != rank)
            for (int r = 0; r < rows; ++r) std::swap(a[r][rank], a[r][pc]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = rank + 1; c < cols; ++c)
                a[r][c] = (a[rank][rank] * a[r][c] - a[r][rank] * a[rank][c]) / prev;
            a[r][rank] = 0;
        }
        prev = a[rank][rank];
        ++rank;
    }
    return rank;
}

long balanced_block_size(long squares, int n) {
    // largest weight block = multinomial over the most balanced content
    std::vector<long> content(n, squares / n);
    for (long r = 0; r < squares % n; ++r) ++content[r];
    Integer size = 1;
    long used = 0;
    for (long part : content)
        for (long c = 1; c <= part; ++c) size = size * (++used) / c;
    return size.fits_slong_p() ? size.get_si() : -1;
}

struct SquareLayout {
    int count = 0;
    std::vector<std::vector<int>> row_classes;  // squares grouped by row
    std::vector<std::vector<int>> col_classes;  // squares grouped by column
};

SquareLayout layout_squares(const GeneralDiagram& gd) {
    SquareLayout layout;
    layout.row_classes.assign(3, {});
    for (std::size_t c = 0; c < gd.columns.size(); ++c) {
        std::vector<int> col;
        for (int row = 1; row <= 3; ++row) {
            if (!(gd.columns[c] & (1u << (row - 1)))) continue;
            col.push_back(layout.count);
            layout.row_classes[row - 1].push_back(layout.count);
            ++layout.count;
        }
        layout.col_classes.push_back(std::move(col));
    }
    return layout;
}

}  // namespace

WeightCharacter schur_module_character(const GeneralDiagram& gd, int n,
                                       const OracleLimits& limits) {
    if (n < 1) throw std::invalid_argument("rank n must be positive");
    for (unsigned c : gd.columns)
        if (c == 0 || c > 0b111) throw std::invalid_argument("invalid column in diagram");
    const long N = gd.square_count();
    if (N > limits.max_squares || n > limits.max_rank) {
        std::ostringstream msg;
        msg << "oracle size limit exceeded: " << N << " squares at rank " << n << " (limits "
            << limits.max_squares << ", " << limits.max_rank << "; largest weight block "
            << balanced_block_size(N, n) << ")";
        throw std::length_error(msg.str());
    }

    WeightCharacter wc;
    wc.n = n;
    if (N == 0) {
        wc.entries[Exponents(n, 0)] = 1;  // empty tensor product: the trivial module
        return wc;
    }

    SquareLayout layout = layout_squares(gd);
    auto row_group = class_group(layout.count, layout.row_classes);
    auto col_group = class_group(layout.count, layout.col_classes);

    // Right action composites rho then kappa: e_f alpha beta picks up
    // fillings t -> f(rho(kappa(t))) with sign(kappa).
    std::vector<std::pair<Perm, int>> composites;
    composites.reserve(row_group.size() * col_group.size());
    for (const auto& [rho, rs] : row_group)
        for (const auto& [kappa, ks] : col_group) {
            Perm p(layout.count);
            for (int t = 0; t < layout.count; ++t) p[t] = rho[kappa[t]];
            composites.emplace_back(std::move(p), ks);
        }

    // Enumerate content vectors and process each weight block independently.
    std::vector<int> content(n, 0);
    content[0] = static_cast<int>(N);
    while (true) {
        // fillings with this content, in lexicographic order
        std::vector<int> base;
        for (int v = 1; v <= n; ++v) base.insert(base.end(), content[v - 1], v);
        std::vector<std::vector<int>> fillings;
        std::map<std::vector<int>, int> index;
        {
            std::vector<int> f = base;
            do {
                index.emplace(f, static_cast<int>(fillings.size()));
                fillings.push_back(f);
            } while (std::next_permutation(f.begin(), f.end()));
        }

        std::vector<std::vector<Integer>> matrix(fillings.size(),
                                                 std::vector<Integer>(fillings.size(), 0));
        std::vector<int> g(layout.count);
        for (std::size_t fi = 0; fi < fillings.size(); ++fi) {
            const auto& f = fillings[fi];
            for (const auto& [perm, sign] : composites) {
                for (int t = 0; t < layout.count; ++t) g[t] = f[perm[t]];
                matrix[index.at(g)][fi] += sign;
            }
        }
        long mult = rank_bareiss(std::move(matrix));
        if (mult > 0) {
            Exponents weight(content.begin(), content.end());
            wc.entries[weight] = mult;
        }

        // next composition of N into n parts
        int idx = n - 2;
        while (idx >= 0 && content[idx] == 0) --idx;
        if (idx < 0) break;
        --content[idx];
        int rest = content[n - 1] + 1;
        content[n - 1] = 0;
        content[idx + 1] = rest;
    }
    return wc;
}

long schur_module_dimension(const GeneralDiagram& gd, int n, const OracleLimits& limits) {
    return schur_module_character(gd, n, limits).dimension();
}

WeightCharacter schur_polynomial(const Partition3& lambda, int n) {
    const auto& l = lambda.lambda;
    if (l[0] < l[1] || l[1] < l[2] || l[2] < 0)
        throw std::invalid_argument("not a partition: parts must be weakly decreasing and >= 0");
    if (n < 3) throw std::invalid_argument("rank n must be at least 3");

    WeightCharacter wc;
    wc.n = n;
    // semistandard tableaux: rows weakly increase, columns strictly increase
    std::vector<std::vector<int>> tableau(3);
    for (int r = 0; r < 3; ++r) tableau[r].assign(l[r], 0);

    Exponents content(n, 0);
    auto record = [&]() {
        ++wc.entries[content];
    };

    // fill row-major
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < 3; ++r)
        for (long c = 0; c < l[r]; ++c) cells.emplace_back(r, static_cast<int>(c));

    auto fill = [&](auto&& self, std::size_t pos) -> void {
        if (pos == cells.size()) {
            record();
            return;
        }
        auto [r, c] = cells[pos];
        int lo = 1;
        if (c > 0) lo = std::max(lo, tableau[r][c - 1]);
        if (r > 0) lo = std::max(lo, tableau[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            tableau[r][c] = v;
            ++content[v - 1];
            self(self, pos + 1);
            --content[v - 1];
        }
        tableau[r][c] = 0;
    };
    fill(fill, 0);

    if (wc.entries.empty() && l[0] == 0) wc.entries[Exponents(n, 0)] = 1;
    return wc;
}

Integer weyl_dimension(const Partition3& lambda, int n) {
    const auto& l = lambda.lambda;
    if (l[0] < l[1] || l[1] < l[2] || l[2] < 0)
        throw std::invalid_argument("not a partition: parts must be weakly decreasing and >= 0");
    if (n < 3) throw std::invalid_argument("rank n must be at least 3");
    std::vector<long> padded(n, 0);
    for (int r = 0; r < 3; ++r) padded[r] = l[r];
    Integer num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= padded[i] - padded[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

}  // namespace schur3
