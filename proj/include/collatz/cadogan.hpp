#pragma once
// Binary head/tail decomposition of odd numbers and the bijection between
// odd naturals and (row, column) coordinates: the number at (i, j) is
// j * 2^(i+1) + 2^i - 1, where i counts the trailing one-bits and j is
// everything above them and their delimiting zero.

#include "collatz/core.hpp"
#include "collatz/natural.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace collatz {

struct EvenInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RowOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DimensionCap : std::length_error {
    using std::length_error::length_error;
};

// Trailing-ones block of an odd number: value = 2^length - 1, length >= 1.
struct TailResult {
    Natural value;
    std::uint64_t length = 0;

    bool operator==(const TailResult&) const = default;
};

// Coordinate pair: row i >= 1 (tail length), column j >= 0 (head). Row
// indexes fit a machine word; a longer tail is unrepresentable input.
struct Coord {
    std::uint64_t i = 1;
    Natural j;

    bool operator==(const Coord&) const = default;
};

inline TailResult tail(const Natural& n) {
    if (is_even(n)) throw EvenInput("tail: input must be odd");
    const std::uint64_t length = trailing_ones(n);
    return {pow2(length) - 1, length};
}

// Bits above the tail and its delimiting zero; may be 0.
inline Natural head(const Natural& n) {
    if (is_even(n)) throw EvenInput("head: input must be odd");
    return n >> (trailing_ones(n) + 1);
}

inline Coord coords(const Natural& n) {
    if (is_even(n)) throw EvenInput("coords: input must be odd");
    const std::uint64_t i = trailing_ones(n);
    return {i, n >> (i + 1)};
}

inline Natural value_at(std::uint64_t i, const Natural& j) {
    if (i == 0) throw RowOutOfRange("value_at: row index must be >= 1");
    return (j << (i + 1)) + pow2(i) - 1;
}

inline Natural value_at(const Coord& c) { return value_at(c.i, c.j); }

constexpr std::uint64_t kMaxTableRows = 64;
constexpr std::uint64_t kMaxTableCols = std::uint64_t(1) << 20;

// Row-major table of value_at(i, j) for 1 <= i <= rows, 0 <= j < cols.
// Entries grow as j * 2^(i+1), hence the size caps.
inline std::vector<std::vector<Natural>> table(std::uint64_t rows, std::uint64_t cols) {
    if (rows < 1 || cols < 1) throw RowOutOfRange("table: rows and cols must be >= 1");
    if (rows > kMaxTableRows || cols > kMaxTableCols)
        throw DimensionCap("table: size cap is 64 rows by 2^20 columns");
    std::vector<std::vector<Natural>> out(rows);
    for (std::uint64_t i = 1; i <= rows; ++i) {
        auto& row = out[i - 1];
        row.reserve(cols);
        // Along a row the entries form an arithmetic progression of stride
        // 2^(i+1); one addition per cell instead of a rebuild.
        Natural entry = pow2(i) - 1;
        const Natural stride = pow2(i + 1);
        for (std::uint64_t j = 0; j < cols; ++j) {
            row.push_back(entry);
            entry += stride;
        }
    }
    return out;
}

}  // namespace collatz
