#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "textio.hpp"

using namespace ffgroup;

TEST_CASE("polynomial text round-trip") {
    auto f2 = Field::make(2, 1);
    const Poly f = parse_poly(f2, "1,1,1");
    CHECK(poly_text(f) == "1,1,1");
    CHECK(poly_pretty(f) == "X^2+X+1");
    CHECK(parse_poly(f2, "X^2+X+1") == f);

    auto f3 = Field::make(3, 1);
    CHECK(poly_pretty(parse_poly(f3, "1,2,0,1")) == "X^3+2X+1");
    CHECK(parse_poly(f3, "X^3+2X+1") == parse_poly(f3, "1,2,0,1"));
    CHECK(parse_poly(f3, "X^2-1") == parse_poly(f3, "2,0,1"));
    CHECK(poly_text(Poly::zero(f3)) == "0");

    CHECK_THROWS_AS(parse_poly(f2, "1,2,1"), Error);  // code out of range
    CHECK_THROWS_AS(parse_poly(f2, ""), Error);
    CHECK_THROWS_AS(parse_poly(f2, "X^2+?"), Error);
}

TEST_CASE("matrix text round-trip") {
    auto f5 = Field::make(5, 1);
    Mat m(f5, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 4;
    m.at(1, 0) = 2;
    m.at(1, 1) = 0;
    CHECK(mat_text(m) == "1 4\n2 0");
    CHECK(parse_mat(f5, 2, "1 4\n2 0") == m);
    CHECK_THROWS_AS(parse_mat(f5, 2, "1 4\n2"), Error);
    CHECK_THROWS_AS(parse_mat(f5, 2, "1 4 0\n2 0 1\n0 0 1"), Error);
}

TEST_CASE("generator files: blocks, comments, diagnostics") {
    auto f2 = Field::make(2, 1);
    const std::string text =
        "# two generators of GL_2(2)\n"
        "0 1\n"
        "1 1\n"
        "\n"
        "0 1   # second block\n"
        "1 0\n";
    const auto mats = parse_generator_file(f2, 2, text);
    REQUIRE(mats.size() == 2);
    CHECK(mats[0] == parse_mat(f2, 2, "0 1\n1 1"));
    CHECK(mats[1] == parse_mat(f2, 2, "0 1\n1 0"));

    CHECK_THROWS_WITH_AS(parse_generator_file(f2, 2, "0 1\n"), doctest::Contains("1 rows"), Error);
    CHECK_THROWS_WITH_AS(parse_generator_file(f2, 2, "0 1\n1 1 1\n"), doctest::Contains("line 2"),
                         Error);
    CHECK_THROWS_AS(parse_generator_file(f2, 2, "# only a comment\n"), Error);
}

TEST_CASE("field descriptor parsing") {
    CHECK(parse_field_descriptor("3^2") == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(parse_field_descriptor("9") == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(parse_field_descriptor("7") == std::pair<std::uint64_t, unsigned>{7, 1});
    CHECK(parse_field_descriptor("2^5") == std::pair<std::uint64_t, unsigned>{2, 5});
    CHECK_THROWS_AS(parse_field_descriptor("6"), Error);
    CHECK_THROWS_AS(parse_field_descriptor("12"), Error);
    CHECK_THROWS_AS(parse_field_descriptor("zebra"), Error);
}
