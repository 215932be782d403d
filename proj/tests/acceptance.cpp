// Acceptance suite: one criterion per check, each with its stated bound and
// time budget, printing exactly one PASS/FAIL line per criterion. Returns
// the number of failed criteria.

#include "collatz/collatz.hpp"

#include "proc.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

using collatz::CaseId;
using collatz::CaseParams;
using collatz::Classification;
using collatz::Coord;
using collatz::Natural;
using collatz::Rational;
using collatz::StepResult;
using Json = nlohmann::ordered_json;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

void report(int number, const std::string& name, bool pass, double elapsed_ms,
            double budget_ms, const std::string& detail = "") {
    const bool in_budget = elapsed_ms <= budget_ms;
    const bool ok = pass && in_budget;
    if (!ok) ++failures;
    std::printf("%s %2d. %s (%.1f ms, budget %.0f ms)%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), elapsed_ms, budget_ms,
                pass ? "" : " [criterion failed]",
                in_budget ? "" : " [over time budget]");
    if (!detail.empty() && !ok) std::printf("      %s\n", detail.c_str());
}

std::string csv_of(const std::vector<std::vector<Natural>>& grid) {
    std::string out;
    for (const auto& row : grid) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ",";
            out += row[j].str();
        }
        out += "\n";
    }
    return out;
}

void criterion_1_worked_step_values() {
    Timer t;
    bool pass = collatz::collatz_step(Natural(5)) == StepResult{Natural(1), 4} &&
                collatz::collatz_step(Natural(21)) == StepResult{Natural(1), 6} &&
                collatz::collatz_step(Natural(2)) == StepResult{Natural(7), 0} &&
                collatz::collatz_step(Natural(9)) == StepResult{Natural(7), 2} &&
                collatz::collatz_step(Natural(0)) == StepResult{Natural(1), 0};
    report(1, "worked step values exact", pass, t.ms(), 1);
}

void criterion_2_table_reproduction() {
    const std::string expected =
        "1,5,9,13,17,21\n"
        "3,11,19,27,35,43\n"
        "7,23,39,55,71,87\n"
        "15,47,79,111,143,175\n"
        "31,95,159,223,287,351\n";
    Timer t;
    const std::string rendered = csv_of(collatz::table(5, 6));
    const double elapsed = t.ms();
    const auto cli = proc::cli("table --rows 5 --cols 6 --format csv");
    const bool pass = rendered == expected && cli.exit_code == 0 && cli.out == expected;
    report(2, "reference table reproduced byte-exactly", pass, elapsed, 10);
}

void criterion_3_bijection() {
    Timer t;
    bool pass = true;
    for (Natural n = 1; pass && n <= 1000000; n += 2)
        pass = collatz::value_at(collatz::coords(n)) == n;
    for (std::uint64_t i = 1; pass && i <= 20; ++i)
        for (Natural j = 0; pass && j <= 1000; ++j)
            pass = collatz::coords(collatz::value_at(i, j)) == Coord{i, j};
    report(3, "coordinate bijection to 10^6", pass, t.ms(), 30000);
}

void criterion_4_strand_k1() {
    Timer t;
    bool pass = true;
    for (std::uint64_t i = 2; pass && i <= 20; ++i)
        for (Natural j = 0; pass && j <= 1000; ++j)
            pass = collatz::collatz_step(collatz::value_at(i, j)).k == 1;
    report(4, "rows above 1 step with k = 1", pass, t.ms(), 10000);
}

void criterion_5_mod3_exclusion() {
    Timer t;
    bool pass = true;
    for (Natural n = 0; pass && n <= 1000000; ++n)
        pass = collatz::collatz_step(n).value % 3 != 0;
    report(5, "step never yields a multiple of 3, n <= 10^6", pass, t.ms(), 10000);
}

void criterion_6_transport() {
    Timer t;
    bool pass = true;
    for (std::uint64_t i = 2; pass && i <= 12; ++i)
        for (Natural j = 0; pass && j <= 500; ++j) {
            const Coord c{i, j};
            pass = collatz::coords(collatz::collatz_step(collatz::value_at(c)).value) ==
                   collatz::coord_step(c);
        }
    report(6, "coordinate transport matches decompose-after-step", pass, t.ms(), 10000);
}

void criterion_7_closed_forms() {
    Timer t;
    bool pass = collatz::column_step_n(Natural(5), 2) == 49;
    for (Natural j = 0; pass && j <= 10000; ++j) {
        Natural running = j;
        for (std::uint64_t m = 0; pass && m <= 20; ++m) {
            const Natural closed = collatz::column_step_n(j, m);
            pass = closed == running &&
                   collatz::column_unstep_n(Rational(closed), m) == Rational(j);
            running = collatz::column_step(running);
        }
    }
    report(7, "transport closed forms exact to j = 10^4, m = 20", pass, t.ms(), 30000);
}

void criterion_8_row1_equivalence() {
    Timer t;
    bool pass = true;
    for (Natural j = 1; pass && j <= 1000000; ++j)
        pass = collatz::collatz_step(4 * j + 1).value == collatz::collatz_step(j).value;
    report(8, "row 1 steps like its column index, j <= 10^6", pass, t.ms(), 30000);
}

void criterion_9_row_reduction_example() {
    Timer t;
    bool pass = collatz::termination_column(Coord{3, Natural(4)}) == 40;
    const auto crossings = collatz::trajectory_crossings(Coord{3, Natural(4)}, 9);
    const std::vector<std::pair<std::uint64_t, Natural>> must_pass = {
        {4, Natural(1)}, {5, Natural(0)}, {2, Natural(13)}, {1, Natural(40)}};
    for (const auto& [row, col] : must_pass) {
        bool found = false;
        for (const auto& c : crossings)
            found = found || (c.row == row && c.col == Rational(col) && c.integral);
        pass = pass && found;
    }
    report(9, "worked row reduction and completed trajectory", pass, t.ms(), 1000);
}

void criterion_10_classification() {
    Timer t;
    const collatz::RestartAnalysis forty = collatz::analyze_restart(Natural(40));
    bool pass = forty.relation == Classification::Lesser && forty.j == 30 &&
                collatz::classify_restart(Natural(6)) == Classification::Greater;
    for (Natural term = 1; pass && term <= 100000; ++term)
        pass = collatz::classify_restart(term) != Classification::On;
    report(10, "worked classifications and no On below 10^5", pass, t.ms(), 60000);
}

void criterion_11_parametrization() {
    Timer t;
    bool pass = true;
    for (Natural term = 1; pass && term <= 100000; ++term) {
        const auto p = collatz::params_of(term);
        pass = p.has_value() && collatz::synthesize_column(*p) == term;
    }
    for (int id = 0; pass && id < 4; ++id) {
        const CaseId cid = static_cast<CaseId>(id);
        const std::uint64_t u_min = (cid == CaseId::EE || cid == CaseId::OE) ? 1 : 0;
        for (Natural tt = 0; pass && tt <= 8; ++tt)
            for (std::uint64_t u = u_min; pass && u <= 8; ++u)
                for (std::uint64_t v = 0; pass && v <= 8; ++v)
                    pass = collatz::check_consistency({cid, tt, u, v});
    }
    report(11, "case parametrization complete and consistent", pass, t.ms(), 60000);
}

void criterion_12_counterexamples() {
    Timer t;
    const collatz::ParamBounds tight{Natural(4), 4, 4};
    const collatz::ParamBounds wide{Natural(12), 12, 12};
    bool pass = true;
    for (int id = 0; id < 4; ++id) {
        const CaseId cid = static_cast<CaseId>(id);
        const auto lesser = collatz::find_counterexample(cid, Classification::Lesser, tight);
        const auto greater = collatz::find_counterexample(cid, Classification::Greater, wide);
        pass = pass && lesser.has_value() && greater.has_value() &&
               !collatz::evaluate_criterion(*lesser, Classification::Lesser) &&
               !collatz::evaluate_criterion(*greater, Classification::Greater);
    }
    // The named witnesses behave as stated.
    pass = pass &&
           collatz::find_counterexample(CaseId::EE, Classification::Lesser, tight) ==
               CaseParams{CaseId::EE, Natural(0), 1, 0} &&
           !collatz::evaluate_criterion({CaseId::EO, Natural(10), 0, 0},
                                        Classification::Greater);
    report(12, "monotonic criteria violated in every case", pass, t.ms(), 1000);
}

void criterion_13_appendix_search() {
    Timer t;
    const collatz::SearchReport r = collatz::appendix_search(32, 32);
    const bool pass = r.appendix_solutions.size() == 1 && r.appendix_solutions[0].a == 1 &&
                      r.appendix_solutions[0].b == 1 && r.appendix_solutions[0].c == 13 &&
                      !r.appendix_solutions[0].well_formed && r.complete;
    report(13, "appendix search finds exactly (1,1,13), ill-formed", pass, t.ms(), 5000);
}

void criterion_14_unified_and_oracle() {
    Timer t;
    const collatz::SearchReport r = collatz::unified_cycle_search(64, 64);
    bool pass = r.unified_solutions.size() == 1 && r.unified_solutions[0].trivial();
    pass = pass && collatz::cross_validate(Natural(100000));
    report(14, "unified search trivial only; oracle cross-validated to 10^5", pass, t.ms(),
           60000);
}

void criterion_15_determinism() {
    Timer t;
    const auto one = proc::cli("search appendix --a-max 32 --b-max 32 --workers 1");
    const auto four = proc::cli("search appendix --a-max 32 --b-max 32 --workers 4");
    bool pass = one.exit_code == 0 && four.exit_code == 0 && one.out == four.out;

    const auto u1 = proc::cli("search unified --i-max 64 --k-max 64 --workers 1");
    const auto u3 = proc::cli("search unified --i-max 64 --k-max 64 --workers 3");
    pass = pass && u1.exit_code == 0 && u1.out == u3.out;

    const auto dir = std::filesystem::temp_directory_path() / "collatz-acceptance";
    std::filesystem::create_directories(dir);
    const std::string cp = (dir / "resume.json").string();
    std::filesystem::remove(cp);
    const auto interrupted = proc::cli("search appendix --a-max 32 --b-max 32 --checkpoint " +
                                       cp + " --max-cells 300");
    const auto resumed = proc::cli("search appendix --a-max 32 --b-max 32 --checkpoint " + cp);
    pass = pass && interrupted.exit_code == 3 && resumed.exit_code == 0 &&
           resumed.out == one.out;
    report(15, "search reports byte-identical across workers and resume", pass, t.ms(), 60000);
}

}  // namespace

int main() {
    criterion_1_worked_step_values();
    criterion_2_table_reproduction();
    criterion_3_bijection();
    criterion_4_strand_k1();
    criterion_5_mod3_exclusion();
    criterion_6_transport();
    criterion_7_closed_forms();
    criterion_8_row1_equivalence();
    criterion_9_row_reduction_example();
    criterion_10_classification();
    criterion_11_parametrization();
    criterion_12_counterexamples();
    criterion_13_appendix_search();
    criterion_14_unified_and_oracle();
    criterion_15_determinism();
    if (failures == 0) std::printf("all 15 acceptance criteria pass\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
