#pragma once
// Arbitrary-precision scalar types and the bit-level helpers the rest of
// the library is built on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace collatz {

// Non-negative arbitrary-precision integer. Signedness is not enforced by
// the type; every operation in this library keeps values >= 0 by
// construction.
using Natural = boost::multiprecision::cpp_int;

// Exact fraction of two arbitrary-precision integers, always kept in lowest
// terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Natural pow2(std::uint64_t e) { return Natural(1) << e; }

inline Natural pow3(std::uint64_t e) {
    Natural r = 1;
    Natural base = 3;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Index of the lowest set bit, i.e. the 2-adic valuation. n must be > 0.
inline std::uint64_t trailing_zeros(const Natural& n) {
    return boost::multiprecision::lsb(n);
}

// Length of the run of one-bits at the bottom of n. Adding 1 turns that run
// into zeros, so a single bit scan suffices.
inline std::uint64_t trailing_ones(const Natural& n) {
    return boost::multiprecision::lsb(n + 1);
}

inline bool is_odd(const Natural& n) { return boost::multiprecision::bit_test(n, 0); }
inline bool is_even(const Natural& n) { return !is_odd(n); }

// Parses a decimal or 0x-prefixed hex literal. Leading zeros are plain
// digits, never an octal marker.
inline std::optional<Natural> parse_natural(std::string_view text) {
    if (text.empty()) return std::nullopt;
    Natural value = 0;
    if (text.size() > 2 && (text.substr(0, 2) == "0x" || text.substr(0, 2) == "0X")) {
        for (char ch : text.substr(2)) {
            int digit;
            if (ch >= '0' && ch <= '9') digit = ch - '0';
            else if (ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
            else if (ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
            else return std::nullopt;
            value = value * 16 + digit;
        }
        return value;
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') return std::nullopt;
        value = value * 10 + (ch - '0');
    }
    return value;
}

inline std::string to_string(const Natural& n) { return n.str(); }

// Renders a rational as "num/den", or just "num" for integers.
inline std::string to_string(const Rational& q) {
    const Natural num = boost::multiprecision::numerator(q);
    const Natural den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Human-format helper: values wider than 40 digits are shortened with an
// explicit digit count. Machine formats (json, csv) never use this.
inline std::string elide(const std::string& digits, std::size_t max_digits = 40) {
    if (digits.size() <= max_digits) return digits;
    return digits.substr(0, 12) + "..." + digits.substr(digits.size() - 12) + " (" +
           std::to_string(digits.size()) + " digits)";
}

inline std::string elide(const Natural& n) { return elide(n.str()); }

}  // namespace collatz
