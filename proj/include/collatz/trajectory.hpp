#pragma once
// Column transport under the Collatz map. A step from row i > 1 sends
// (i, j) to (i-1, 3j+1); iterating to row 1 has the closed form
// (i-m, j*3^m + (3^m-1)/2). The exact-rational inverse of the transport
// extends a completed trajectory upward and defines the boundary used to
// classify restart points. No floating point anywhere on these paths.

#include "collatz/cadogan.hpp"
#include "collatz/core.hpp"
#include "collatz/natural.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace collatz {

// ---- column transport g : j -> 3j + 1 and its exact inverse ----

inline Natural column_step(const Natural& j) { return 3 * j + 1; }
inline Rational column_step(const Rational& j) { return 3 * j + 1; }

// m-fold transport in closed form: j * 3^m + (3^m - 1) / 2.
inline Natural column_step_n(const Natural& j, std::uint64_t m) {
    const Natural p = pow3(m);
    return j * p + (p - 1) / 2;
}

inline Rational column_unstep(const Rational& j) { return (j - 1) / 3; }

// m-fold inverse in closed form: (j - (3^m - 1)/2) / 3^m, evaluated exactly
// over the rationals. Round-trips column_step_n for any m.
inline Rational column_unstep_n(const Rational& j, std::uint64_t m) {
    const Natural p = pow3(m);
    return (j - Rational(p - 1, 2)) / Rational(p);
}

// ---- coordinate transport ----

inline Coord coord_step(const Coord& c) {
    if (c.i < 2) throw RowOutOfRange("coord_step: no row below row 1");
    return {c.i - 1, column_step(c.j)};
}

inline Coord coord_step_m(const Coord& c, std::uint64_t m) {
    if (c.i < 1 || m > c.i - 1)
        throw RowOutOfRange("coord_step_m: step count exceeds rows below start");
    return {c.i - m, column_step_n(c.j, m)};
}

// Row reduction: the column where the trajectory from c meets row 1.
// Closed form, so tails thousands of bits long cost one exponentiation.
inline Natural termination_column(const Coord& c) {
    if (c.i < 1) throw RowOutOfRange("termination_column: row index must be >= 1");
    return column_step_n(c.j, c.i - 1);
}

// Start point for the next row reduction: decompose gamma(J) into its tail
// length (row) and head (column). gamma(J) is always odd, so this is total.
inline Coord restart_point(const Natural& term_col) {
    const Natural next = collatz_step(term_col).value;
    const std::uint64_t i = trailing_ones(next);
    return {i, next >> (i + 1)};
}

// Column where the boundary defined by termination column J crosses row i.
// May be a non-integer rational.
inline Rational boundary_column(const Natural& term_col, std::uint64_t i) {
    if (i == 0) throw RowOutOfRange("boundary_column: row index must be >= 1");
    return column_unstep_n(Rational(term_col), i - 1);
}

// ---- restart classification against the prior boundary ----

enum class Classification { Lesser, On, Greater };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::Lesser: return "Lesser";
        case Classification::On: return "On";
        default: return "Greater";
    }
}

struct RestartAnalysis {
    std::uint64_t i = 1;      // restart row
    Natural j;                // restart column
    Rational boundary;        // boundary crossing at the restart row
    Classification relation = Classification::Lesser;
};

inline RestartAnalysis analyze_restart(const Natural& term_col) {
    if (term_col < 1) throw RowOutOfRange("analyze_restart: termination column must be >= 1");
    RestartAnalysis out;
    const Coord start = restart_point(term_col);
    out.i = start.i;
    out.j = start.j;
    out.boundary = boundary_column(term_col, start.i);
    const Rational col(out.j);
    if (col < out.boundary) out.relation = Classification::Lesser;
    else if (col == out.boundary) out.relation = Classification::On;
    else out.relation = Classification::Greater;
    return out;
}

inline Classification classify_restart(const Natural& term_col) {
    return analyze_restart(term_col).relation;
}

// ---- iterated row reductions ----

constexpr std::uint64_t kDefaultReduceRounds = 10000;

struct ReduceResult {
    enum class Halt { ReachedZero, CycleDetected, BudgetExhausted };

    std::vector<Natural> sequence;  // termination columns J_0, J_1, ...
    Halt halt = Halt::BudgetExhausted;
};

inline const char* to_string(ReduceResult::Halt h) {
    switch (h) {
        case ReduceResult::Halt::ReachedZero: return "reached-zero";
        case ReduceResult::Halt::CycleDetected: return "cycle-detected";
        default: return "budget-exhausted";
    }
}

// J_0 = reduction of n0's coordinates; J_{r+1} = reduction of the restart
// of J_r. Halts at J = 0 (column of the number 1). A repeated nonzero J
// would witness a cycle and is reported, never suppressed.
inline ReduceResult reduce_sequence(const Natural& n0,
                                    std::uint64_t max_rounds = kDefaultReduceRounds) {
    if (is_even(n0)) throw EvenInput("reduce_sequence: start value must be odd");
    ReduceResult out;
    std::set<Natural> seen;
    Natural current = termination_column(coords(n0));
    while (out.sequence.size() < max_rounds) {
        out.sequence.push_back(current);
        if (current == 0) {
            out.halt = ReduceResult::Halt::ReachedZero;
            return out;
        }
        if (!seen.insert(current).second) {
            out.halt = ReduceResult::Halt::CycleDetected;
            return out;
        }
        current = termination_column(restart_point(current));
    }
    out.halt = ReduceResult::Halt::BudgetExhausted;
    return out;
}

}  // namespace collatz
