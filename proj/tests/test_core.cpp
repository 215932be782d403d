#include "collatz/core.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using collatz::collatz_step;
using collatz::Natural;
using collatz::StepResult;

TEST_CASE("step on worked values") {
    CHECK(collatz_step(Natural(5)) == StepResult{Natural(1), 4});
    CHECK(collatz_step(Natural(21)) == StepResult{Natural(1), 6});
    CHECK(collatz_step(Natural(2)) == StepResult{Natural(7), 0});
    CHECK(collatz_step(Natural(9)) == StepResult{Natural(7), 2});
    CHECK(collatz_step(Natural(0)) == StepResult{Natural(1), 0});
    CHECK(collatz_step(Natural(111)) == StepResult{Natural(167), 1});
}

TEST_CASE("step matches the division oracle and its defining identity") {
    for (Natural n = 0; n <= 100000; ++n) {
        const StepResult s = collatz_step(n);
        const auto [value, k] = oracle::step_by_division(n);
        REQUIRE(s.value == value);
        REQUIRE(s.k == k);
        REQUIRE(collatz::is_odd(s.value));
        REQUIRE((s.value << s.k) == 3 * n + 1);
    }
}

TEST_CASE("step output is never a multiple of 3") {
    for (Natural n = 0; n <= 100000; ++n) REQUIRE(collatz_step(n).value % 3 != 0);
}

TEST_CASE("step on a large value") {
    // 2^200 - 1 is odd with a 200-bit tail; 3n+1 = 3*2^200 - 2 halves once.
    const Natural n = (Natural(1) << 200) - 1;
    const StepResult s = collatz_step(n);
    CHECK(s.k == 1);
    CHECK(s.value == 3 * (Natural(1) << 199) - 1);
}

TEST_CASE("two-operand inverse") {
    CHECK(collatz::collatz_inverse(4, Natural(1)) == Natural(5));
    CHECK(collatz::collatz_inverse(2, Natural(7)) == Natural(9));
    CHECK_FALSE(collatz::collatz_inverse(0, Natural(3)).has_value());

    SECTION("round-trips every step") {
        for (Natural n = 0; n <= 100000; ++n) {
            const StepResult s = collatz_step(n);
            const auto back = collatz::collatz_inverse(s.k, s.value);
            REQUIRE(back.has_value());
            REQUIRE(*back == n);
        }
    }

    SECTION("odd multiples of 3 have no inverse for any k") {
        for (Natural x = 3; x <= 3000; x += 6)
            for (std::uint64_t k = 0; k <= 10; ++k)
                REQUIRE_FALSE(collatz::collatz_inverse(k, x).has_value());
    }
}

TEST_CASE("strand inverse") {
    CHECK(collatz::strand_inverse(Natural(167)) == Natural(111));
    CHECK(collatz::strand_inverse(Natural(5)) == Natural(3));
    CHECK_FALSE(collatz::strand_inverse(Natural(19)).has_value());

    SECTION("steps back with k = 1 whenever defined") {
        for (Natural n = 3; n <= 100000; n += 2) {
            const auto back = collatz::strand_inverse(n);
            if (n % 3 == 2) {
                REQUIRE(back.has_value());
                REQUIRE(collatz_step(*back) == StepResult{n, 1});
            } else {
                REQUIRE_FALSE(back.has_value());
            }
        }
    }
}

TEST_CASE("iterate") {
    CHECK(collatz::iterate(Natural(111), 2) == 251);
    CHECK(collatz::iterate(Natural(27), 1) == 41);
    CHECK(collatz::iterate(Natural(12345), 0) == 12345);
}

TEST_CASE("trace to one") {
    SECTION("0 converges in one application") {
        const collatz::Trace t = collatz::trace_to_one(Natural(0), 10);
        REQUIRE(t.converged);
        REQUIRE(t.m() == 1);
        REQUIRE(t.steps == std::vector<StepResult>{{Natural(1), 0}});
    }
    SECTION("5 converges in one application") {
        const collatz::Trace t = collatz::trace_to_one(Natural(5), 10);
        REQUIRE(t.converged);
        REQUIRE(t.m() == 1);
        REQUIRE(t.steps == std::vector<StepResult>{{Natural(1), 4}});
    }
    SECTION("1 is convergence by definition, zero applications") {
        const collatz::Trace t = collatz::trace_to_one(Natural(1), 10);
        REQUIRE(t.converged);
        REQUIRE(t.m() == 0);
        REQUIRE(t.steps.empty());
    }
    SECTION("27 converges in 41 odd steps") {
        const collatz::Trace t = collatz::trace_to_one(Natural(27), 200);
        REQUIRE(t.converged);
        REQUIRE(t.m() == 41);
        REQUIRE(t.steps.front() == StepResult{Natural(41), 1});
        REQUIRE(t.steps.back() == StepResult{Natural(1), 4});
    }
    SECTION("budget exhaustion returns the partial trace") {
        const collatz::Trace t = collatz::trace_to_one(Natural(27), 5);
        REQUIRE_FALSE(t.converged);
        REQUIRE(t.steps.size() == 5);
    }
    SECTION("trace values agree with iterate") {
        for (const Natural n : {Natural(7), Natural(27), Natural(97), Natural(871)}) {
            const collatz::Trace t = collatz::trace_to_one(n, 1000);
            REQUIRE(t.converged);
            for (std::size_t s = 0; s < t.steps.size(); ++s)
                REQUIRE(t.steps[s].value == collatz::iterate(n, s + 1));
        }
    }
}

TEST_CASE("exception candidates") {
    CHECK_FALSE(collatz::exception_candidate(Natural(4)));
    CHECK_FALSE(collatz::exception_candidate(Natural(9)));
    CHECK(collatz::exception_candidate(Natural(5)));
    CHECK_FALSE(collatz::exception_candidate(Natural(0)));
    CHECK_FALSE(collatz::exception_candidate(Natural(1)));

    // Definition sweep: odd, above 1, not a multiple of 3.
    for (Natural n = 0; n <= 1000; ++n) {
        const bool expected = (n % 2 == 1) && n > 1 && (n % 3 != 0);
        REQUIRE(collatz::exception_candidate(n) == expected);
    }
}

TEST_CASE("natural parsing and formatting") {
    CHECK(collatz::parse_natural("111") == Natural(111));
    CHECK(collatz::parse_natural("0x6F") == Natural(111));
    CHECK(collatz::parse_natural("0X6f") == Natural(111));
    CHECK(collatz::parse_natural("007") == Natural(7));  // decimal, not octal
    CHECK_FALSE(collatz::parse_natural("").has_value());
    CHECK_FALSE(collatz::parse_natural("-3").has_value());
    CHECK_FALSE(collatz::parse_natural("12a").has_value());
    CHECK_FALSE(collatz::parse_natural("0x").has_value());

    CHECK(collatz::to_string(collatz::Rational(5, 3)) == "5/3");
    CHECK(collatz::to_string(collatz::Rational(40)) == "40");

    const std::string longnum(41, '7');
    CHECK(collatz::elide(Natural(123)) == "123");
    CHECK(collatz::elide(longnum) == "777777777777...777777777777 (41 digits)");
}
