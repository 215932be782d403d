#include "collatz/diagram.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using collatz::Coord;
using collatz::Natural;
using collatz::Rational;

namespace {

// Marker character at (row, col) of a rendered ascii diagram.
char marker_at(const std::string& ascii, std::uint64_t rows, std::uint64_t row,
               std::uint64_t col) {
    std::istringstream in(ascii);
    std::string line;
    const std::size_t gutter = std::to_string(rows).size() + 1;
    for (std::uint64_t r = rows; r >= 1; --r) {
        REQUIRE(std::getline(in, line));
        if (r == row) return line.at(gutter + col);
    }
    FAIL("row not in diagram");
    return '?';
}

}  // namespace

TEST_CASE("trajectory crossings for the worked start point") {
    const auto crossings = collatz::trajectory_crossings(Coord{3, Natural(4)}, 9);
    // Rows 6..9 cross left of column 0 and are omitted; the first point of
    // the completed trajectory is (5, 0).
    REQUIRE(crossings.size() == 5);
    CHECK(crossings[0].row == 5);
    CHECK(crossings[0].col == Rational(0));
    CHECK(crossings[0].integral);
    CHECK(crossings[1].row == 4);
    CHECK(crossings[1].col == Rational(1));
    CHECK(crossings[2].row == 3);
    CHECK(crossings[2].col == Rational(4));
    CHECK(crossings[3].row == 2);
    CHECK(crossings[3].col == Rational(13));
    CHECK(crossings[4].row == 1);
    CHECK(crossings[4].col == Rational(40));
    for (const auto& c : crossings) CHECK(c.integral);
}

TEST_CASE("non-integral crossings are detected") {
    // Start (1, 6): one row up crosses at (6-1)/3 = 5/3.
    const auto crossings = collatz::trajectory_crossings(Coord{1, Natural(6)}, 3);
    REQUIRE(crossings.size() == 3);
    CHECK(crossings[0].row == 3);
    CHECK(crossings[0].col == Rational(2, 9));
    CHECK_FALSE(crossings[0].integral);
    CHECK(crossings[1].row == 2);
    CHECK(crossings[1].col == Rational(5, 3));
    CHECK_FALSE(crossings[1].integral);
    CHECK(crossings[2].row == 1);
    CHECK(crossings[2].col == Rational(6));
    CHECK(crossings[2].integral);
}

TEST_CASE("ascii diagram marks the worked trajectory") {
    const std::string ascii = collatz::render_ascii(9, 43, Coord{3, Natural(4)});
    CHECK(marker_at(ascii, 9, 5, 0) == '*');
    CHECK(marker_at(ascii, 9, 4, 1) == '*');
    CHECK(marker_at(ascii, 9, 3, 4) == '*');
    CHECK(marker_at(ascii, 9, 2, 13) == '*');
    CHECK(marker_at(ascii, 9, 1, 40) == '*');
    CHECK(marker_at(ascii, 9, 9, 0) == '.');
    CHECK(marker_at(ascii, 9, 1, 39) == '.');
}

TEST_CASE("ascii diagram marks fractional crossings distinctly") {
    const std::string ascii = collatz::render_ascii(3, 8, Coord{1, Natural(6)});
    CHECK(marker_at(ascii, 3, 1, 6) == '*');
    CHECK(marker_at(ascii, 3, 2, 1) == '+');  // 5/3 floors to column 1
    CHECK(marker_at(ascii, 3, 3, 0) == '+');  // 2/9 floors to column 0
}

TEST_CASE("ascii diagram is byte-deterministic") {
    const std::string once = collatz::render_ascii(5, 10, Coord{2, Natural(2)});
    const std::string twice = collatz::render_ascii(5, 10, Coord{2, Natural(2)});
    CHECK(once == twice);
    // Above (2, 2): row 3 crosses at 1/3 (floors to column 0); rows 4 and 5
    // cross left of column 0 and are omitted. Below: (1, 7).
    CHECK(once ==
          "5 ..........\n"
          "4 ..........\n"
          "3 +.........\n"
          "2 ..*.......\n"
          "1 .......*..\n");
}

TEST_CASE("svg diagram contains the lattice and exact trajectory") {
    const std::string svg = collatz::render_svg(5, 6, Coord{3, Natural(1)});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    // Scale 3^5 = 243; start (3,1) maps to x = 243 + 243, y = (5-3)*243 + 243.
    CHECK(svg.find("486,729") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    CHECK(svg == collatz::render_svg(5, 6, Coord{3, Natural(1)}));
}

TEST_CASE("svg scales fractional crossings to integers") {
    // Start (1, 6), 3 rows, scale 3^3 = 27, margin 27. Crossings: row 3 at
    // 2/9 -> x 33, row 2 at 5/3 -> x 72, row 1 at 6 -> x 189.
    const std::string svg = collatz::render_svg(3, 8, Coord{1, Natural(6)});
    CHECK(svg.find("points=\"33,27 72,54 189,81\"") != std::string::npos);
    CHECK(svg.find("fill=\"none\" stroke=\"red\"") != std::string::npos);  // open markers
}

TEST_CASE("diagram size caps") {
    CHECK_THROWS_AS(collatz::render_ascii(65, 1, std::nullopt), collatz::DimensionCap);
    CHECK_THROWS_AS(collatz::render_svg(65, 1, std::nullopt), collatz::DimensionCap);
    CHECK_THROWS_AS(collatz::render_ascii(0, 1, std::nullopt), collatz::RowOutOfRange);
}
