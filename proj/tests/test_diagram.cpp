#include <doctest.h>

#include <algorithm>
#include <random>

#include "schur3/diagram.hpp"

using namespace schur3;

TEST_CASE("canonicalize counts column types") {
    Diagram3 d = canonicalize({{2, 3}, {1}});
    CHECK(d.m == std::array<long, 7>{1, 0, 0, 0, 1, 0, 0});

    Diagram3 repeated = canonicalize({{1, 2}, {1, 2}});
    CHECK(repeated.m == std::array<long, 7>{0, 0, 0, 2, 0, 0, 0});

    CHECK(canonicalize({}).m == std::array<long, 7>{});
}

TEST_CASE("canonicalize rejects bad columns") {
    CHECK_THROWS_AS(canonicalize({{}}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize({{4}}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize({{0, 1}}), std::invalid_argument);
}

TEST_CASE("canonicalize is order independent") {
    std::mt19937_64 rng(5);
    std::vector<std::vector<int>> columns = {{1}, {2, 3}, {1, 2, 3}, {1, 2}, {3}, {1, 2}};
    Diagram3 reference = canonicalize(columns);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(columns.begin(), columns.end(), rng);
        CHECK(canonicalize(columns) == reference);
    }
}

TEST_CASE("as_partition recognizes Young diagrams") {
    Diagram3 staircase = parse_diagram("1,0,0,1,0,0,1");
    auto p = as_partition(staircase);
    REQUIRE(p.has_value());
    CHECK(p->lambda == std::array<long, 3>{3, 2, 1});

    auto trivial = as_partition(Diagram3{});
    REQUIRE(trivial.has_value());
    CHECK(trivial->lambda == std::array<long, 3>{0, 0, 0});

    Diagram3 bad;
    bad.m[4] = 1;  // {2,3} column
    CHECK_FALSE(as_partition(bad).has_value());
}

TEST_CASE("total_boxes") {
    Diagram3 all_ones;
    all_ones.m.fill(1);
    CHECK(all_ones.total_boxes() == 12);

    Diagram3 triple;
    triple.m[6] = 1;
    CHECK(triple.total_boxes() == 3);

    CHECK(Diagram3{}.total_boxes() == 0);
}

TEST_CASE("diagram text form round-trips") {
    const std::string text = "1,0,2,0,3,0,4";
    CHECK(format_diagram(parse_diagram(text)) == text);
    CHECK_THROWS_AS(parse_diagram("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("1,2,3,4,5,6,-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("1,2,3,4,5,6,7,8"), std::invalid_argument);
}
