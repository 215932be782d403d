#pragma once
// Named, runnable property suites. Each suite sweeps one family of library
// invariants up to a caller-chosen bound and reports pass/fail per property
// with the number of cases checked and the first failing case, if any.
// Suites are addressable by a content name or by a lemma-style alias.

#include "collatz/cadogan.hpp"
#include "collatz/core.hpp"
#include "collatz/criteria.hpp"
#include "collatz/cycle_search.hpp"
#include "collatz/natural.hpp"
#include "collatz/trajectory.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace collatz {

struct PropertyResult {
    std::string name;
    bool pass = true;
    std::uint64_t checked = 0;
    std::string detail;  // first failing case, empty when passing

    void fail(const std::string& what) {
        if (pass) {
            pass = false;
            detail = what;
        }
    }
};

struct Suite {
    std::string name;
    std::vector<std::string> aliases;
    std::string description;
    std::function<std::vector<PropertyResult>(std::uint64_t)> run;
};

namespace verify_detail {

inline std::uint64_t capped(std::uint64_t bound, std::uint64_t cap) {
    return std::min(bound, cap);
}

inline std::vector<PropertyResult> run_step_form(std::uint64_t bound) {
    PropertyResult odd{"value-is-odd"};
    PropertyResult identity{"value-times-2k-is-3n-plus-1"};
    for (Natural n = 0; n <= bound; ++n) {
        const StepResult s = collatz_step(n);
        ++odd.checked;
        ++identity.checked;
        if (!is_odd(s.value)) odd.fail("n=" + n.str());
        if ((s.value << s.k) != 3 * n + 1) identity.fail("n=" + n.str());
    }
    return {odd, identity};
}

inline std::vector<PropertyResult> run_mod3(std::uint64_t bound) {
    PropertyResult p{"step-never-multiple-of-3"};
    for (Natural n = 0; n <= bound; ++n) {
        ++p.checked;
        if (collatz_step(n).value % 3 == 0) p.fail("n=" + n.str());
    }
    return {p};
}

inline std::vector<PropertyResult> run_inverse_roundtrip(std::uint64_t bound) {
    PropertyResult rt{"inverse-of-step-returns-input"};
    PropertyResult none{"no-inverse-for-multiples-of-3"};
    for (Natural n = 0; n <= bound; ++n) {
        const StepResult s = collatz_step(n);
        ++rt.checked;
        const auto back = collatz_inverse(s.k, s.value);
        if (!back || *back != n) rt.fail("n=" + n.str());
    }
    for (Natural x = 3; x <= bound; x += 6) {  // odd multiples of 3
        for (std::uint64_t k = 0; k <= 8; ++k) {
            ++none.checked;
            if (collatz_inverse(k, x)) none.fail("x=" + x.str() + " k=" + std::to_string(k));
        }
    }
    return {rt, none};
}

inline std::vector<PropertyResult> run_strand_inverse(std::uint64_t bound) {
    PropertyResult p{"strand-inverse-steps-back-with-k-1"};
    PropertyResult dom{"strand-inverse-needs-residue-2"};
    for (Natural n = 3; n <= bound; n += 2) {
        const auto back = strand_inverse(n);
        if (n % 3 == 2) {
            ++p.checked;
            if (!back) { p.fail("n=" + n.str()); continue; }
            const StepResult s = collatz_step(*back);
            if (s.value != n || s.k != 1) p.fail("n=" + n.str());
        } else {
            ++dom.checked;
            if (back) dom.fail("n=" + n.str());
        }
    }
    return {p, dom};
}

inline std::vector<PropertyResult> run_bijection(std::uint64_t bound) {
    PropertyResult fwd{"value-of-coords-returns-input"};
    PropertyResult bwd{"coords-of-value-returns-indexes"};
    for (Natural n = 1; n <= bound; n += 2) {
        ++fwd.checked;
        if (value_at(coords(n)) != n) fwd.fail("n=" + n.str());
    }
    const std::uint64_t j_cap = capped(bound, 1000);
    for (std::uint64_t i = 1; i <= 20; ++i) {
        for (Natural j = 0; j <= j_cap; ++j) {
            ++bwd.checked;
            if (coords(value_at(i, j)) != Coord{i, j})
                bwd.fail("i=" + std::to_string(i) + " j=" + j.str());
        }
    }
    return {fwd, bwd};
}

inline std::vector<PropertyResult> run_tail_identity(std::uint64_t bound) {
    PropertyResult odd{"tail-is-odd-and-at-most-n"};
    PropertyResult ident{"removing-tail-leaves-shifted-head"};
    for (Natural n = 1; n <= bound; n += 2) {
        const TailResult t = tail(n);
        ++odd.checked;
        ++ident.checked;
        if (!is_odd(t.value) || t.value > n || t.value != pow2(t.length) - 1)
            odd.fail("n=" + n.str());
        if (n - t.value != (n >> t.length) << t.length) ident.fail("n=" + n.str());
    }
    return {odd, ident};
}

inline std::vector<PropertyResult> run_strand_k1(std::uint64_t bound) {
    PropertyResult p{"rows-above-1-step-with-k-1"};
    for (std::uint64_t i = 2; i <= 20; ++i) {
        for (Natural j = 0; j <= bound; ++j) {
            ++p.checked;
            if (collatz_step(value_at(i, j)).k != 1)
                p.fail("i=" + std::to_string(i) + " j=" + j.str());
        }
    }
    return {p};
}

inline std::vector<PropertyResult> run_row1(std::uint64_t bound) {
    PropertyResult form{"row-1-value-is-4j-plus-1"};
    PropertyResult gamma{"step-of-4j-plus-1-equals-step-of-j"};
    for (Natural j = 0; j <= bound; ++j) {
        ++form.checked;
        if (value_at(1, j) != 4 * j + 1) form.fail("j=" + j.str());
    }
    for (Natural j = 1; j <= bound; ++j) {
        ++gamma.checked;
        if (collatz_step(4 * j + 1).value != collatz_step(j).value) gamma.fail("j=" + j.str());
    }
    return {form, gamma};
}

inline std::vector<PropertyResult> run_transport(std::uint64_t bound) {
    PropertyResult p{"coord-step-matches-decompose-after-step"};
    const std::uint64_t j_cap = capped(bound, 500);
    for (std::uint64_t i = 2; i <= 12; ++i) {
        for (Natural j = 0; j <= j_cap; ++j) {
            ++p.checked;
            const Coord c{i, j};
            if (coords(collatz_step(value_at(c)).value) != coord_step(c))
                p.fail("i=" + std::to_string(i) + " j=" + j.str());
        }
    }
    return {p};
}

inline std::vector<PropertyResult> run_closed_forms(std::uint64_t bound) {
    PropertyResult iter{"closed-form-equals-iterated-transport"};
    PropertyResult sum{"closed-form-equals-summation-form"};
    PropertyResult rt{"inverse-power-undoes-power"};
    PropertyResult nat{"reapplying-transport-restores-integrality"};
    const std::uint64_t j_cap = capped(bound, 10000);
    const std::uint64_t j_stride = j_cap >= 1000 ? 7 : 1;
    for (Natural j = 0; j <= j_cap; j += j_stride) {
        Natural running = j;
        Natural power_sum = 1;  // 3^0 + ... + 3^(m-1) accumulated
        for (std::uint64_t m = 0; m <= 20; ++m) {
            const Natural closed = column_step_n(j, m);
            ++iter.checked;
            ++sum.checked;
            ++rt.checked;
            if (closed != running) iter.fail("j=" + j.str() + " m=" + std::to_string(m));
            if (m > 0 && closed != pow3(m) * j + power_sum)
                sum.fail("j=" + j.str() + " m=" + std::to_string(m));
            if (column_unstep_n(Rational(closed), m) != Rational(j))
                rt.fail("j=" + j.str() + " m=" + std::to_string(m));
            if (m > 0) power_sum += pow3(m);
            running = column_step(running);
        }
        // Partway-rational chains become natural again once the transport
        // has been applied at least as often as its inverse.
        for (std::uint64_t m = 0; m <= 6; ++m) {
            Rational q(j);
            for (std::uint64_t s = 0; s < m; ++s) q = column_unstep(q);
            for (std::uint64_t s = 0; s < m; ++s) q = column_step(q);
            for (std::uint64_t extra = 0; extra <= 3; ++extra) {
                ++nat.checked;
                if (boost::multiprecision::denominator(q) != 1 ||
                    q != Rational(column_step_n(j, extra)))
                    nat.fail("j=" + j.str() + " m=" + std::to_string(m) +
                             " extra=" + std::to_string(extra));
                q = column_step(q);
            }
        }
    }
    return {iter, sum, rt, nat};
}

inline std::vector<PropertyResult> run_domination(std::uint64_t bound) {
    PropertyResult dom{"transport-dominates-step"};
    PropertyResult twice{"transport-is-twice-step-on-rows-above-1"};
    for (Natural j = 0; j <= bound; ++j) {
        ++dom.checked;
        if (column_step(j) < collatz_step(j).value) dom.fail("j=" + j.str());
    }
    const std::uint64_t j_cap = capped(bound, 500);
    for (std::uint64_t i = 2; i <= 12; ++i) {
        for (Natural j = 0; j <= j_cap; ++j) {
            ++twice.checked;
            const Natural n = value_at(i, j);
            if (3 * n + 1 != 2 * collatz_step(n).value)
                twice.fail("i=" + std::to_string(i) + " j=" + j.str());
        }
    }
    return {dom, twice};
}

inline std::vector<PropertyResult> run_parallel_boundaries(std::uint64_t bound) {
    PropertyResult p{"lesser-termination-stays-lesser-on-every-row"};
    const std::uint64_t cap = capped(bound, 2000);
    for (Natural a = 1; a + 1 <= cap; ++a) {
        const Natural b = a + 1;
        for (std::uint64_t i = 1; i <= 30; ++i) {
            ++p.checked;
            if (boundary_column(a, i) >= boundary_column(b, i))
                p.fail("Ja=" + a.str() + " i=" + std::to_string(i));
        }
    }
    return {p};
}

inline std::vector<PropertyResult> run_classification_exact(std::uint64_t bound) {
    PropertyResult scaled{"rational-relation-equals-integer-scaled-relation"};
    PropertyResult det{"determinant-equals-boundary-column"};
    for (Natural term = 1; term <= bound; ++term) {
        const RestartAnalysis a = analyze_restart(term);
        // Clearing denominators: j <=> D becomes (2j+1) 3^(i-1) <=> 2J+1.
        const Natural lhs = (2 * a.j + 1) * pow3(a.i - 1);
        const Natural rhs = 2 * term + 1;
        const Classification by_int = lhs < rhs    ? Classification::Lesser
                                      : lhs == rhs ? Classification::On
                                                   : Classification::Greater;
        ++scaled.checked;
        if (by_int != a.relation) scaled.fail("J=" + term.str());
    }
    const std::uint64_t det_cap = capped(bound, 10000);
    const std::uint64_t stride = det_cap >= 1000 ? 11 : 1;
    for (Natural term = 1; term <= det_cap; term += stride) {
        for (std::uint64_t i = 1; i <= 30; ++i) {
            ++det.checked;
            if (determinant(i, term) != boundary_column(term, i))
                det.fail("J=" + term.str() + " i=" + std::to_string(i));
        }
    }
    return {scaled, det};
}

inline std::vector<PropertyResult> run_no_on(std::uint64_t bound) {
    PropertyResult p{"no-restart-lands-on-its-boundary"};
    for (Natural term = 1; term <= bound; ++term) {
        ++p.checked;
        if (classify_restart(term) == Classification::On) p.fail("J=" + term.str());
    }
    return {p};
}

inline std::vector<PropertyResult> run_case_completeness(std::uint64_t bound) {
    PropertyResult rt{"every-column-inverts-to-one-case-row"};
    PropertyResult spurious{"case-rows-never-synthesize-spurious-values"};
    for (Natural term = 1; term <= bound; ++term) {
        ++rt.checked;
        const auto p = params_of(term);
        if (!p || synthesize_column(*p) != term) rt.fail("J=" + term.str());
    }
    for (int id = 0; id < 4; ++id) {
        const CaseId cid = static_cast<CaseId>(id);
        for (Natural t = 0; t <= 8; ++t) {
            for (std::uint64_t u = (cid == CaseId::EE || cid == CaseId::OE) ? 1 : 0; u <= 8;
                 ++u) {
                for (std::uint64_t v = 0; v <= 8; ++v) {
                    const CaseTriple triple = expand_params({cid, t, u, v});
                    ++spurious.checked;
                    if (!collatz_inverse(triple.k, value_at(triple.i, triple.j)))
                        spurious.fail(std::string(to_string(cid)) + " t=" + t.str());
                }
            }
        }
    }
    return {rt, spurious};
}

inline std::vector<PropertyResult> run_criteria_agreement(std::uint64_t bound) {
    PropertyResult direct{"criterion-matches-boundary-classification"};
    PropertyResult cleared{"integer-cleared-forms-match-exact-criterion"};
    const std::uint64_t cube = capped(bound, 8);
    const Classification rels[] = {Classification::Lesser, Classification::On,
                                   Classification::Greater};
    for (int id = 0; id < 4; ++id) {
        const CaseId cid = static_cast<CaseId>(id);
        for (Natural t = 0; t <= cube; ++t) {
            for (std::uint64_t u = (cid == CaseId::EE || cid == CaseId::OE) ? 1 : 0; u <= cube;
                 ++u) {
                for (std::uint64_t v = 0; v <= cube; ++v) {
                    const CaseParams p{cid, t, u, v};
                    const Natural term = synthesize_column(p);
                    for (Classification rel : rels) {
                        ++cleared.checked;
                        if (evaluate_criterion(p, rel) != evaluate_criterion_cleared(p, rel))
                            cleared.fail(std::string(to_string(cid)) + " t=" + t.str() +
                                         " u=" + std::to_string(u) + " v=" + std::to_string(v));
                    }
                    if (term == 0) continue;  // criteria quantify over J > 0
                    const Classification actual = classify_restart(term);
                    for (Classification rel : rels) {
                        ++direct.checked;
                        if (evaluate_criterion(p, rel) != (actual == rel))
                            direct.fail(std::string(to_string(cid)) + " t=" + t.str() +
                                        " u=" + std::to_string(u) + " v=" + std::to_string(v));
                    }
                }
            }
        }
    }
    return {direct, cleared};
}

inline std::vector<PropertyResult> run_cycle_consistency(std::uint64_t bound) {
    PropertyResult p{"boundary-oracle-agrees-with-unified-equation"};
    const std::uint64_t cap = capped(bound, 100000);
    const auto disagreement = cross_validate_disagreement(Natural(cap));
    p.checked = cap;
    if (disagreement) p.fail("J=" + disagreement->str());
    return {p};
}

}  // namespace verify_detail

inline const std::vector<Suite>& verification_suites() {
    static const std::vector<Suite> suites = {
        {"step-form", {"def-1.1"}, "odd result and value*2^k = 3n+1 for n <= bound",
         verify_detail::run_step_form},
        {"mod3-exclusion", {"lemma-1.2"}, "the map never produces a multiple of 3, n <= bound",
         verify_detail::run_mod3},
        {"inverse-roundtrip", {"lemma-1.1"},
         "two-operand inverse undoes the map; multiples of 3 have no inverse",
         verify_detail::run_inverse_roundtrip},
        {"strand-inverse", {"lemma-3.7.3"},
         "one-operand inverse steps back with k = 1 exactly when n = 2 (mod 3)",
         verify_detail::run_strand_inverse},
        {"bijection", {"lemma-3.4", "lemma-3.5"},
         "coords and value_at invert each other (odd n <= bound; 20 rows x bound columns)",
         verify_detail::run_bijection},
        {"tail-identity", {"lemma-3.3", "def-3.3"},
         "tail is odd, at most n, and splits n exactly", verify_detail::run_tail_identity},
        {"strand-k1", {"lemma-3.7"}, "rows above 1 always step with k = 1 (j <= bound)",
         verify_detail::run_strand_k1},
        {"row1-form", {"lemma-4.12", "lemma-4.14"},
         "row 1 holds 4j+1 and steps like its column index", verify_detail::run_row1},
        {"transport", {"lemma-4.3"},
         "coordinate transport agrees with decompose-after-step", verify_detail::run_transport},
        {"closed-forms", {"lemma-4.9", "lemma-4.7", "lemma-6.3"},
         "closed forms match iteration and invert exactly", verify_detail::run_closed_forms},
        {"domination", {"lemma-4.5", "corollary-4.5.1"},
         "column transport dominates the map and doubles it on rows above 1",
         verify_detail::run_domination},
        {"parallel-boundaries", {"lemma-5.4", "lemma-5.5"},
         "ordered termination columns stay ordered on every row",
         verify_detail::run_parallel_boundaries},
        {"classification-exact", {"lemma-6.6"},
         "rational classification equals the integer-scaled route; determinant equals the "
         "boundary column",
         verify_detail::run_classification_exact},
        {"no-on", {"lemma-6.4"}, "no J <= bound restarts onto its own boundary",
         verify_detail::run_no_on},
        {"case-completeness", {"lemma-7.5", "lemma-7.6"},
         "every J <= bound inverts to exactly one case row; case rows are never spurious",
         verify_detail::run_case_completeness},
        {"criteria-agreement", {"lemma-7.8", "lemma-7.9", "lemma-7.10"},
         "parametrized criteria agree with direct classification and integer-cleared forms "
         "(cube side min(bound, 8))",
         verify_detail::run_criteria_agreement},
        {"cycle-consistency", {"lemma-5.7"},
         "exact boundary oracle agrees with the unified cycle equation (J <= bound)",
         verify_detail::run_cycle_consistency},
    };
    return suites;
}

inline const Suite* find_suite(const std::string& name) {
    for (const Suite& s : verification_suites()) {
        if (s.name == name) return &s;
        for (const std::string& alias : s.aliases)
            if (alias == name) return &s;
    }
    return nullptr;
}

}  // namespace collatz
