#pragma once
// Dot-diagram rendering of the coordinate lattice with an optional completed
// trajectory overlay. The diagram is flipped vertically: lesser row indexes
// are lower, so row 1 (the termination row) is the bottom line.
//
// A completed trajectory through start (i0, j0) crosses row r at column
//   column_step_n(j0, i0 - r)          for r <= i0  (always integral)
//   column_unstep_n(j0, r - i0)        for r >  i0  (may be rational)
// Rows are drawn while the crossing column is >= 0; non-integral crossings
// are marked distinctly from lattice hits.

#include "collatz/cadogan.hpp"
#include "collatz/natural.hpp"
#include "collatz/trajectory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace collatz {

struct Crossing {
    std::uint64_t row = 1;
    Rational col;
    bool integral = false;
};

// Row crossings of the completed trajectory through start, for rows in
// [1, rows], ordered top row first. Crossings left of column 0 are omitted.
inline std::vector<Crossing> trajectory_crossings(const Coord& start, std::uint64_t rows) {
    if (start.i == 0) throw RowOutOfRange("trajectory_crossings: row index must be >= 1");
    std::vector<Crossing> out;
    for (std::uint64_t r = rows; r >= 1; --r) {
        Crossing c;
        c.row = r;
        if (r <= start.i) {
            c.col = Rational(column_step_n(start.j, start.i - r));
            c.integral = true;
        } else {
            c.col = column_unstep_n(Rational(start.j), r - start.i);
            c.integral = boost::multiprecision::denominator(c.col) == 1;
        }
        if (c.col >= 0) out.push_back(std::move(c));
    }
    return out;
}

namespace detail {

// Floor of a non-negative rational.
inline Natural rational_floor(const Rational& q) {
    return boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
}

}  // namespace detail

// One text line per row, top = highest row index. Lattice points are '.',
// integral trajectory crossings '*', non-integral crossings '+' placed at
// the floor of their column.
inline std::string render_ascii(std::uint64_t rows, std::uint64_t cols,
                                const std::optional<Coord>& start) {
    if (rows < 1 || cols < 1) throw RowOutOfRange("render_ascii: rows and cols must be >= 1");
    if (rows > kMaxTableRows || cols > kMaxTableCols)
        throw DimensionCap("render_ascii: size cap is 64 rows by 2^20 columns");

    std::vector<Crossing> crossings;
    if (start) crossings = trajectory_crossings(*start, rows);

    const std::size_t label_width = std::to_string(rows).size();
    std::string out;
    for (std::uint64_t r = rows; r >= 1; --r) {
        std::string label = std::to_string(r);
        out.append(label_width - label.size(), ' ');
        out += label;
        out += ' ';
        std::string line(cols, '.');
        for (const Crossing& c : crossings) {
            if (c.row != r) continue;
            const Natural cell = detail::rational_floor(c.col);
            if (cell < cols) {
                const auto at = static_cast<std::size_t>(cell.convert_to<std::uint64_t>());
                line[at] = c.integral ? '*' : '+';
            }
        }
        out += line;
        out += '\n';
    }
    return out;
}

// SVG with every coordinate scaled by 3^rows, which clears all trajectory
// crossing denominators to exact integers. Lattice dots are filled circles;
// the trajectory is a polyline; non-integral crossings get open markers.
inline std::string render_svg(std::uint64_t rows, std::uint64_t cols,
                              const std::optional<Coord>& start) {
    if (rows < 1 || cols < 1) throw RowOutOfRange("render_svg: rows and cols must be >= 1");
    if (rows > kMaxTableRows || cols > kMaxTableCols)
        throw DimensionCap("render_svg: size cap is 64 rows by 2^20 columns");

    const Natural scale = pow3(rows);
    auto x_of = [&](const Rational& col) -> Natural {
        // col * scale is integral: the denominator divides 3^(rows-1).
        return boost::multiprecision::numerator(col) * scale /
               boost::multiprecision::denominator(col);
    };
    auto y_of = [&](std::uint64_t row) -> Natural { return Natural(rows - row) * scale; };

    const Natural margin = scale;
    const Natural width = Natural(cols + 1) * scale;
    const Natural height = Natural(rows + 1) * scale;
    const Natural dot_r = scale / 8;
    const Natural hit_r = scale / 4;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + width.str() + " " +
           height.str() + "\">\n";
    for (std::uint64_t r = rows; r >= 1; --r) {
        const Natural cy = margin + y_of(r);
        Natural cx = margin;
        for (std::uint64_t j = 0; j < cols; ++j) {
            svg += "<circle cx=\"" + cx.str() + "\" cy=\"" + cy.str() + "\" r=\"" +
                   dot_r.str() + "\" fill=\"black\"/>\n";
            cx += scale;
        }
    }
    if (start) {
        const std::vector<Crossing> crossings = trajectory_crossings(*start, rows);
        if (!crossings.empty()) {
            std::string points;
            for (const Crossing& c : crossings) {
                if (!points.empty()) points += ' ';
                points += (margin + x_of(c.col)).str() + "," + (margin + y_of(c.row)).str();
            }
            svg += "<polyline points=\"" + points +
                   "\" fill=\"none\" stroke=\"red\" stroke-width=\"" + dot_r.str() + "\"/>\n";
            for (const Crossing& c : crossings) {
                const Natural cx = margin + x_of(c.col);
                const Natural cy = margin + y_of(c.row);
                if (c.integral) {
                    svg += "<circle cx=\"" + cx.str() + "\" cy=\"" + cy.str() + "\" r=\"" +
                           hit_r.str() + "\" fill=\"red\"/>\n";
                } else {
                    svg += "<circle cx=\"" + cx.str() + "\" cy=\"" + cy.str() + "\" r=\"" +
                           hit_r.str() +
                           "\" fill=\"none\" stroke=\"red\" stroke-width=\"" + dot_r.str() +
                           "\"/>\n";
                }
            }
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace collatz
