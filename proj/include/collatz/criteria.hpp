#pragma once
// Residue-class parametrization of restart triples. Every termination
// column J determines a triple (j, i, k) through gamma(J); requiring
// 2^k (2^i (2j+1) - 1) - 1 = 0 (mod 3) splits the triples into four cases
// by the parities of k and i, each linearly parametrized by (t, u, v).
// The determinant D is the boundary crossing at the restart row; the
// convergence / cycle / divergence criteria compare j against D exactly.

#include "collatz/cadogan.hpp"
#include "collatz/core.hpp"
#include "collatz/natural.hpp"
#include "collatz/trajectory.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace collatz {

struct ResidueViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Case ids name the parities of (k, i): E even, O odd.
enum class CaseId { EE, EO, OE, OO };

inline const char* to_string(CaseId id) {
    switch (id) {
        case CaseId::EE: return "EE";
        case CaseId::EO: return "EO";
        case CaseId::OE: return "OE";
        default: return "OO";
    }
}

inline std::optional<CaseId> case_from_string(const std::string& s) {
    if (s == "EE") return CaseId::EE;
    if (s == "EO") return CaseId::EO;
    if (s == "OE") return CaseId::OE;
    if (s == "OO") return CaseId::OO;
    return std::nullopt;
}

struct CaseParams {
    CaseId id = CaseId::EE;
    Natural t;
    std::uint64_t u = 0;
    std::uint64_t v = 0;

    bool operator==(const CaseParams&) const = default;
};

struct CaseTriple {
    Natural j;
    std::uint64_t i = 1;
    std::uint64_t k = 0;

    bool operator==(const CaseTriple&) const = default;
};

// Case rows:
//   EE: j = 3t+2, i = 2u,   k = 2v    (u >= 1, since rows start at 1)
//   EO: j = 3t,   i = 2u+1, k = 2v
//   OE: j = 3t+1, i = 2u,   k = 2v+1  (u >= 1)
//   OO: j = 3t+1, i = 2u+1, k = 2v+1
inline CaseTriple expand_params(const CaseParams& p) {
    switch (p.id) {
        case CaseId::EE:
            if (p.u == 0) throw RowOutOfRange("expand_params: even-row case needs u >= 1");
            return {3 * p.t + 2, 2 * p.u, 2 * p.v};
        case CaseId::EO:
            return {3 * p.t, 2 * p.u + 1, 2 * p.v};
        case CaseId::OE:
            if (p.u == 0) throw RowOutOfRange("expand_params: even-row case needs u >= 1");
            return {3 * p.t + 1, 2 * p.u, 2 * p.v + 1};
        default:
            return {3 * p.t + 1, 2 * p.u + 1, 2 * p.v + 1};
    }
}

// J = (2^k (2^i (2j+1) - 1) - 1) / 3. The residue construction guarantees
// exact division; an inexact division here is an implementation bug.
inline Natural synthesize_column(const CaseParams& p) {
    const CaseTriple t = expand_params(p);
    const Natural numerator = ((((2 * t.j + 1) << t.i) - 1) << t.k) - 1;
    if (numerator % 3 != 0)
        throw ResidueViolation("synthesize_column: residue construction violated");
    return numerator / 3;
}

// True iff the parameters reproduce themselves through one Collatz step:
// gamma(J) must land on the number at (i, j) with valuation exactly k.
inline bool check_consistency(const CaseParams& p) {
    CaseTriple t;
    try {
        t = expand_params(p);
    } catch (const RowOutOfRange&) {
        return false;
    }
    const Natural term_col = synthesize_column(p);
    const StepResult step = collatz_step(term_col);
    return step.k == t.k && step.value == value_at(t.i, t.j);
}

// D = (J - (3^(i-1) - 1)/2) / 3^(i-1), built directly from the formula as
// an independent route to the same value as boundary_column.
inline Rational determinant(std::uint64_t i, const Natural& term_col) {
    if (i == 0) throw RowOutOfRange("determinant: row index must be >= 1");
    const Natural p = pow3(i - 1);
    return Rational(2 * term_col - p + 1, 2 * p);
}

// Exact comparison of the case's j against its determinant.
inline bool evaluate_criterion(const CaseParams& p, Classification relation) {
    const CaseTriple t = expand_params(p);
    const Rational d = determinant(t.i, synthesize_column(p));
    const Rational j(t.j);
    switch (relation) {
        case Classification::Lesser: return j < d;
        case Classification::On: return j == d;
        default: return j > d;
    }
}

// Integer-cleared form of the same comparison. Multiplying j < D through
// by 2 * 3^(i-1) gives (2j+1) 3^(i-1) < 2J + 1, and substituting the case
// synthesis of J clears to
//     (2j+1) 3^i  <  (2j+1) 2^(i+k+1) - 2^(k+1) + 1
// with per-case constants 2j+1 = 6t+5 / 6t+1 / 6t+3 / 6t+3. Validated
// against evaluate_criterion over the whole (t, u, v) <= 8 cube in tests.
inline bool evaluate_criterion_cleared(const CaseParams& p, Classification relation) {
    Natural lhs, rhs;
    switch (p.id) {
        case CaseId::EE: {
            if (p.u == 0) throw RowOutOfRange("even-row case needs u >= 1");
            const Natural c = 6 * p.t + 5;
            lhs = c * pow3(2 * p.u);
            rhs = (c << (2 * (p.u + p.v) + 1)) - pow2(2 * p.v + 1) + 1;
            break;
        }
        case CaseId::EO: {
            const Natural c = 6 * p.t + 1;
            lhs = c * pow3(2 * p.u + 1);
            rhs = (c << (2 * (p.u + p.v + 1))) - pow2(2 * p.v + 1) + 1;
            break;
        }
        case CaseId::OE: {
            if (p.u == 0) throw RowOutOfRange("even-row case needs u >= 1");
            const Natural c = 6 * p.t + 3;
            lhs = c * pow3(2 * p.u);
            rhs = (c << (2 * (p.u + p.v + 1))) - pow2(2 * p.v + 2) + 1;
            break;
        }
        default: {
            const Natural c = 6 * p.t + 3;
            lhs = c * pow3(2 * p.u + 1);
            rhs = (c << (2 * (p.u + p.v) + 3)) - pow2(2 * p.v + 2) + 1;
            break;
        }
    }
    switch (relation) {
        case Classification::Lesser: return lhs < rhs;
        case Classification::On: return lhs == rhs;
        default: return lhs > rhs;
    }
}

// Inverts the parametrization: extract (j, i, k) from gamma(J), pick the
// case from the parities, and recover (t, u, v). Returns nothing only if
// the residue of j contradicts the case row, which no real J produces.
inline std::optional<CaseParams> params_of(const Natural& term_col) {
    const StepResult step = collatz_step(term_col);
    const Coord c = coords(step.value);
    const bool k_even = (step.k % 2) == 0;
    const bool i_even = (c.i % 2) == 0;
    CaseParams p;
    int residue;
    if (k_even && i_even) { p.id = CaseId::EE; residue = 2; }
    else if (k_even) { p.id = CaseId::EO; residue = 0; }
    else if (i_even) { p.id = CaseId::OE; residue = 1; }
    else { p.id = CaseId::OO; residue = 1; }
    if (c.j % 3 != residue) return std::nullopt;
    p.t = (c.j - residue) / 3;
    p.u = i_even ? c.i / 2 : (c.i - 1) / 2;
    p.v = k_even ? step.k / 2 : (step.k - 1) / 2;
    return p;
}

struct ParamBounds {
    Natural t_max;
    std::uint64_t u_max = 0;
    std::uint64_t v_max = 0;
};

// Scans the (t, u, v) cube in lexicographic order and returns the first
// point where the universal relation j <relation> D fails. Points that
// synthesize J = 0 are skipped: the criteria quantify over J > 0, and
// J = 0 is the fixed point of the number 1.
inline std::optional<CaseParams> find_counterexample(CaseId id, Classification relation,
                                                     const ParamBounds& bounds) {
    for (Natural t = 0; t <= bounds.t_max; ++t) {
        const std::uint64_t u_min =
            (id == CaseId::EE || id == CaseId::OE) ? 1 : 0;
        for (std::uint64_t u = u_min; u <= bounds.u_max; ++u) {
            for (std::uint64_t v = 0; v <= bounds.v_max; ++v) {
                const CaseParams p{id, t, u, v};
                if (synthesize_column(p) == 0) continue;
                if (!evaluate_criterion(p, relation)) return p;
            }
        }
    }
    return std::nullopt;
}

}  // namespace collatz
