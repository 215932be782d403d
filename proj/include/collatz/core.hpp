#pragma once
// The Collatz map on odd-normalized form: one step multiplies by 3, adds 1,
// and strips every factor of 2. Both inverse forms, iteration, tracing, and
// the minimal must-test predicate live here too.

#include "collatz/natural.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace collatz {

// One application of the map: value is odd and value * 2^k = 3n + 1.
struct StepResult {
    Natural value;
    std::uint64_t k = 0;

    bool operator==(const StepResult&) const = default;
};

// k is the count of trailing zero bits of 3n+1, extracted in one scan.
inline StepResult collatz_step(const Natural& n) {
    Natural t = 3 * n + 1;
    const std::uint64_t k = trailing_zeros(t);
    t >>= k;
    return {std::move(t), k};
}

// Two-operand inverse (n * 2^k - 1) / 3. Returns nothing when the pair is
// not on a backward path, i.e. n * 2^k - 1 is not a multiple of 3; searches
// probe such pairs deliberately, so this is a value, not a failure.
inline std::optional<Natural> collatz_inverse(std::uint64_t k, const Natural& n) {
    const Natural scaled = (n << k) - 1;
    if (scaled % 3 != 0) return std::nullopt;
    return scaled / 3;
}

// One-operand inverse (2n - 1) / 3 along a strand, where the step that got
// here is known to have halved exactly once. Defined only for n = 2 (mod 3).
inline std::optional<Natural> strand_inverse(const Natural& n) {
    if (n % 3 != 2) return std::nullopt;
    return (2 * n - 1) / 3;
}

// m-fold application of the map; iterate(n, 0) = n.
inline Natural iterate(Natural n, std::uint64_t m) {
    for (std::uint64_t s = 0; s < m; ++s) n = collatz_step(n).value;
    return n;
}

// Full step list from n down to 1, or a partial list if the budget runs
// out. Running out of budget says nothing about divergence.
struct Trace {
    std::vector<StepResult> steps;
    bool converged = false;

    std::uint64_t m() const { return steps.size(); }
};

constexpr std::uint64_t kDefaultTraceBudget = 100000;

// n = 1 is convergence by definition, so it traces as zero applications.
inline Trace trace_to_one(const Natural& n, std::uint64_t max_steps = kDefaultTraceBudget) {
    Trace trace;
    if (n == 1) {
        trace.converged = true;
        return trace;
    }
    Natural current = n;
    while (trace.steps.size() < max_steps) {
        StepResult step = collatz_step(current);
        current = step.value;
        trace.steps.push_back(std::move(step));
        if (current == 1) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

// The minimal set worth testing: odd, above 1, and not a multiple of 3.
// Everything else either converges by definition or reduces to this set.
inline bool exception_candidate(const Natural& n) {
    return is_odd(n) && n > 1 && n % 3 != 0;
}

}  // namespace collatz
