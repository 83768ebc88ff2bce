#include <doctest.h>

#include <algorithm>
#include <random>

#include "schur3/oracle.hpp"

using namespace schur3;

TEST_CASE("general diagram text form") {
    GeneralDiagram gd = parse_general_diagram("1,2;2,3;1,3");
    REQUIRE(gd.columns.size() == 3);
    CHECK(gd.columns[0] == 0b011);
    CHECK(gd.columns[1] == 0b110);
    CHECK(gd.columns[2] == 0b101);
    CHECK(format_general_diagram(gd) == "1,2;2,3;1,3");
    CHECK(gd.square_count() == 6);
    CHECK_THROWS_AS(parse_general_diagram("1,4"), std::invalid_argument);
}

TEST_CASE("single column gives the exterior power") {
    WeightCharacter full = schur_module_character(parse_general_diagram("1,2,3"), 3);
    CHECK(full.entries == std::map<Exponents, long>{{{1, 1, 1}, 1}});
    CHECK(full.dimension() == 1);

    WeightCharacter wedge2 = schur_module_character(parse_general_diagram("1,2"), 3);
    CHECK(wedge2.entries ==
          std::map<Exponents, long>{{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}});

    CHECK(schur_module_dimension(parse_general_diagram("1,2,3"), 4) == 4);
}

TEST_CASE("two singleton columns in one row give the symmetric square") {
    WeightCharacter sym2 = schur_module_character(parse_general_diagram("1;1"), 3);
    CHECK(sym2.dimension() == 6);
    for (const auto& [e, mult] : sym2.entries) CHECK(mult == 1);
    CHECK(sym2.entries.count({2, 0, 0}) == 1);
    CHECK(sym2.entries.count({1, 1, 0}) == 1);
    CHECK(sym2.entries.count({0, 0, 2}) == 1);
}

TEST_CASE("two singleton columns in different rows give the full tensor square") {
    CHECK(schur_module_dimension(parse_general_diagram("1;2"), 3) == 9);
}

TEST_CASE("empty diagram gives the trivial module") {
    WeightCharacter trivial = schur_module_character(GeneralDiagram{}, 3);
    CHECK(trivial.entries == std::map<Exponents, long>{{{0, 0, 0}, 1}});
}

TEST_CASE("oracle character is invariant under column order") {
    GeneralDiagram gd = parse_general_diagram("1,2;2,3;1");
    WeightCharacter reference = schur_module_character(gd, 3);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        GeneralDiagram shuffled = gd;
        std::shuffle(shuffled.columns.begin(), shuffled.columns.end(), rng);
        CHECK(schur_module_character(shuffled, 3) == reference);
    }
}

TEST_CASE("oracle character is symmetric in the variables") {
    WeightCharacter wc = schur_module_character(parse_general_diagram("1,2;2,3"), 3);
    CHECK(is_symmetric(wc));
    CHECK(is_homogeneous(wc));
}

TEST_CASE("oracle respects the size limits") {
    GeneralDiagram big;
    for (int c = 0; c < 9; ++c) big.columns.push_back(0b1);
    CHECK_THROWS_AS(schur_module_character(big, 3), std::length_error);
    OracleLimits loose;
    loose.max_squares = 9;
    CHECK(schur_module_dimension(big, 3, loose) > 0);

    CHECK_THROWS_AS(schur_module_character(parse_general_diagram("1"), 5), std::length_error);
}

TEST_CASE("schur polynomial small cases") {
    WeightCharacter e1 = schur_polynomial(Partition3{{1, 0, 0}}, 3);
    CHECK(e1.entries ==
          std::map<Exponents, long>{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});

    WeightCharacter e3 = schur_polynomial(Partition3{{1, 1, 1}}, 3);
    CHECK(e3.entries == std::map<Exponents, long>{{{1, 1, 1}, 1}});

    WeightCharacter adjoint = schur_polynomial(Partition3{{2, 1, 0}}, 3);
    CHECK(adjoint.dimension() == 8);
    CHECK(adjoint.entries.at({1, 1, 1}) == 2);

    CHECK_THROWS_AS(schur_polynomial(Partition3{{1, 2, 0}}, 3), std::invalid_argument);
}

TEST_CASE("weyl dimension formula") {
    CHECK(weyl_dimension(Partition3{{1, 0, 0}}, 3) == 3);
    CHECK(weyl_dimension(Partition3{{2, 1, 0}}, 3) == 8);
    CHECK(weyl_dimension(Partition3{{1, 1, 1}}, 4) == 4);
    CHECK(weyl_dimension(Partition3{{0, 0, 0}}, 5) == 1);
    CHECK(weyl_dimension(Partition3{{4, 2, 1}}, 6) == 2520);
}

TEST_CASE("schur polynomial dimension agrees with weyl formula") {
    for (long l1 = 0; l1 <= 3; ++l1)
        for (long l2 = 0; l2 <= l1; ++l2)
            for (long l3 = 0; l3 <= l2; ++l3) {
                Partition3 lambda{{l1, l2, l3}};
                for (int n : {3, 4}) {
                    WeightCharacter wc = schur_polynomial(lambda, n);
                    CHECK(Integer(wc.dimension()) == weyl_dimension(lambda, n));
                    CHECK(is_symmetric(wc));
                }
            }
}

TEST_CASE("brute force matches schur polynomial on Young diagrams") {
    // staircase (3,2,1) = columns {1,2,3}, {1,2}, {1}
    GeneralDiagram staircase = parse_general_diagram("1,2,3;1,2;1");
    for (int n : {3, 4}) {
        WeightCharacter brute = schur_module_character(staircase, n);
        WeightCharacter classical = schur_polynomial(Partition3{{3, 2, 1}}, n);
        CHECK(brute == classical);
    }
}
