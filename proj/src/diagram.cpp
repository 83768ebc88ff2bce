#include "schur3/diagram.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace schur3 {

int column_size(int type) {
    return std::popcount(kColumnMasks.at(type));
}

std::string column_name(int type) {
    unsigned mask = kColumnMasks.at(type);
    std::string s = "{";
    for (int row = 1; row <= 3; ++row) {
        if (!(mask & (1u << (row - 1)))) continue;
        if (s.size() > 1) s += ",";
        s += std::to_string(row);
    }
    return s + "}";
}

long Diagram3::total_boxes() const {
    long total = 0;
    for (int t = 0; t < kNumColumnTypes; ++t) total += m[t] * column_size(t);
    return total;
}

Diagram3 canonicalize(const std::vector<std::vector<int>>& columns) {
    Diagram3 d;
    for (const auto& column : columns) {
        if (column.empty()) throw std::invalid_argument("empty column");
        unsigned mask = 0;
        for (int row : column) {
            if (row < 1 || row > 3)
                throw std::invalid_argument("row index " + std::to_string(row) +
                                            " outside {1,2,3}");
            mask |= 1u << (row - 1);
        }
        for (int t = 0; t < kNumColumnTypes; ++t) {
            if (kColumnMasks[t] == mask) {
                ++d.m[t];
                break;
            }
        }
    }
    return d;
}

std::optional<Partition3> as_partition(const Diagram3& d) {
    // Young diagrams use only the top-justified columns {1}, {1,2}, {1,2,3}.
    if (d.m[1] != 0 || d.m[2] != 0 || d.m[4] != 0 || d.m[5] != 0) return std::nullopt;
    Partition3 p;
    p.lambda = {d.m[0] + d.m[3] + d.m[6], d.m[3] + d.m[6], d.m[6]};
    return p;
}

Diagram3 parse_diagram(std::string_view text) {
    Diagram3 d;
    std::string s(text);
    std::istringstream in(s);
    std::string field;
    int idx = 0;
    while (std::getline(in, field, ',')) {
        if (idx >= kNumColumnTypes) throw std::invalid_argument("diagram needs exactly 7 multiplicities");
        std::size_t pos = 0;
        long value = std::stol(field, &pos);
        if (pos != field.size()) throw std::invalid_argument("bad multiplicity: " + field);
        if (value < 0) throw std::invalid_argument("negative multiplicity");
        d.m[idx++] = value;
    }
    if (idx != kNumColumnTypes) throw std::invalid_argument("diagram needs exactly 7 multiplicities");
    return d;
}

std::string format_diagram(const Diagram3& d) {
    std::string s;
    for (int t = 0; t < kNumColumnTypes; ++t) {
        if (t) s += ",";
        s += std::to_string(d.m[t]);
    }
    return s;
}

}  // namespace schur3
