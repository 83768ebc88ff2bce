#ifndef SCHUR3_DIAGRAM_HPP
#define SCHUR3_DIAGRAM_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schur3 {

// The seven column types of the universal three-row diagram, as bitmasks
// over rows {1,2,3}, in the canonical order
// {1}, {2}, {3}, {1,2}, {2,3}, {1,3}, {1,2,3}.
inline constexpr std::array<unsigned, 7> kColumnMasks = {0b001, 0b010, 0b100,
                                                         0b011, 0b110, 0b101, 0b111};

inline constexpr int kNumColumnTypes = 7;

int column_size(int type);              // number of rows in the column type
std::string column_name(int type);      // e.g. "{1,3}"

// A three-row diagram as a multiplicity vector over the universal diagram.
struct Diagram3 {
    std::array<long, 7> m{};

    long total_boxes() const;
    bool operator==(const Diagram3&) const = default;
};

// Counts column occurrences; order-independent.  Each column is a nonempty
// set of row indices drawn from {1,2,3}.
Diagram3 canonicalize(const std::vector<std::vector<int>>& columns);

struct Partition3 {
    std::array<long, 3> lambda{};
    bool operator==(const Partition3&) const = default;
};

// The partition when the diagram is a Young diagram (only columns
// {1}, {1,2}, {1,2,3} present); nullopt otherwise.
std::optional<Partition3> as_partition(const Diagram3& d);

// Text form: seven comma-separated multiplicities in canonical order.
Diagram3 parse_diagram(std::string_view text);
std::string format_diagram(const Diagram3& d);

}  // namespace schur3

#endif
