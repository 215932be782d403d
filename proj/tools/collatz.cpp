// Command-line surface: tracing, coordinates, tables, dot diagrams, row
// reduction, boundary classification, cycle searches, and the property
// verification suites.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 budget exhausted
// or search interrupted, 4 invariant violation.

#include "collatz/collatz.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using collatz::Natural;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;
constexpr int kExitViolation = 4;

int domain_error(const std::string& what) {
    std::cerr << "error: " << what << "\n";
    return kExitDomain;
}

Natural require_natural(const std::string& text) {
    auto value = collatz::parse_natural(text);
    if (!value) throw collatz::EvenInput("malformed natural number: " + text);
    return *value;
}

unsigned default_workers() {
    if (const char* env = std::getenv("COLLATZ_WORKERS")) {
        char* end = nullptr;
        const unsigned long parsed = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && parsed >= 1 && parsed <= 1024)
            return static_cast<unsigned>(parsed);
    }
    return 1;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---- trace ----

struct TraceOpts {
    std::string n;
    std::uint64_t max_steps = collatz::kDefaultTraceBudget;
    std::string format = "text";
};

int cmd_trace(const TraceOpts& opt) {
    Natural n;
    try {
        n = require_natural(opt.n);
    } catch (const std::exception& e) {
        return domain_error(e.what());
    }
    if (opt.max_steps < 1) return domain_error("--max-steps must be >= 1");
    const collatz::Trace trace = collatz::trace_to_one(n, opt.max_steps);
    if (opt.format == "json") {
        Json j;
        j["n"] = n.str();
        j["max_steps"] = opt.max_steps;
        j["converged"] = trace.converged;
        if (trace.converged) j["m"] = trace.m();
        else j["m"] = nullptr;
        j["steps"] = Json::array();
        for (const auto& s : trace.steps)
            j["steps"].push_back({{"value", s.value.str()}, {"k", s.k}});
        print_json(j);
    } else {
        for (const auto& s : trace.steps)
            std::cout << "(" << collatz::elide(s.value) << ", k=" << s.k << ")\n";
        if (trace.converged) std::cout << "m=" << trace.m() << "\n";
        else std::cout << "budget exhausted after " << trace.steps.size() << " steps\n";
    }
    return trace.converged ? kExitOk : kExitBudget;
}

// ---- coords ----

int cmd_coords(const std::string& text, const std::string& format) {
    try {
        const Natural n = require_natural(text);
        const collatz::Coord c = collatz::coords(n);
        if (format == "json") {
            print_json(Json{{"n", n.str()}, {"i", c.i}, {"j", c.j.str()}});
        } else {
            std::cout << "(" << c.i << ", " << collatz::elide(c.j) << ")\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return domain_error(e.what());
    }
}

// ---- table ----

int cmd_table(std::uint64_t rows, std::uint64_t cols, const std::string& format) {
    std::vector<std::vector<Natural>> grid;
    try {
        grid = collatz::table(rows, cols);
    } catch (const std::exception& e) {
        return domain_error(e.what());
    }
    if (format == "json") {
        Json entries = Json::array();
        for (const auto& row : grid) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(v.str());
            entries.push_back(std::move(r));
        }
        print_json(Json{{"rows", rows}, {"cols", cols}, {"entries", entries}});
    } else if (format == "csv") {
        for (const auto& row : grid) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) std::cout << ",";
                std::cout << row[j].str();
            }
            std::cout << "\n";
        }
    } else {
        std::vector<std::size_t> width(cols, 0);
        std::vector<std::vector<std::string>> cells(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                cells[i].push_back(grid[i][j].str());
                width[j] = std::max(width[j], cells[i][j].size());
            }
        }
        for (const auto& row : cells) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) std::cout << " ";
                std::cout << std::string(width[j] - row[j].size(), ' ') << row[j];
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

// ---- diagram ----

int cmd_diagram(std::uint64_t rows, std::uint64_t cols, const std::string& trajectory,
                const std::string& format) {
    std::optional<collatz::Coord> start;
    try {
        if (!trajectory.empty()) {
            const auto comma = trajectory.find(',');
            if (comma == std::string::npos)
                return domain_error("--trajectory expects i,j");
            const auto row_text = trajectory.substr(0, comma);
            const auto col_text = trajectory.substr(comma + 1);
            const auto row = collatz::parse_natural(row_text);
            const auto col = collatz::parse_natural(col_text);
            if (!row || !col || *row < 1 || *row > collatz::kMaxTableRows)
                return domain_error("--trajectory expects i,j with 1 <= i <= 64");
            start = collatz::Coord{row->convert_to<std::uint64_t>(), *col};
        }
        if (format == "svg") std::cout << collatz::render_svg(rows, cols, start);
        else std::cout << collatz::render_ascii(rows, cols, start);
        return kExitOk;
    } catch (const std::exception& e) {
        return domain_error(e.what());
    }
}

// ---- reduce ----

int cmd_reduce(const std::string& text, std::uint64_t rounds, const std::string& format) {
    try {
        const Natural n = require_natural(text);
        if (rounds < 1) return domain_error("--rounds must be >= 1");
        const collatz::ReduceResult r = collatz::reduce_sequence(n, rounds);
        if (format == "json") {
            Json j;
            j["n"] = n.str();
            j["max_rounds"] = rounds;
            j["halt"] = collatz::to_string(r.halt);
            j["sequence"] = Json::array();
            for (const auto& term : r.sequence) j["sequence"].push_back(term.str());
            print_json(j);
        } else {
            for (std::size_t idx = 0; idx < r.sequence.size(); ++idx)
                std::cout << "J[" << idx << "] = " << collatz::elide(r.sequence[idx]) << "\n";
            std::cout << "halt: " << collatz::to_string(r.halt) << "\n";
        }
        return r.halt == collatz::ReduceResult::Halt::BudgetExhausted ? kExitBudget : kExitOk;
    } catch (const std::exception& e) {
        return domain_error(e.what());
    }
}

// ---- classify ----

char relation_op(collatz::Classification c) {
    switch (c) {
        case collatz::Classification::Lesser: return '<';
        case collatz::Classification::On: return '=';
        default: return '>';
    }
}

Json classify_json(const Natural& term, const collatz::RestartAnalysis& a) {
    return Json{{"J", term.str()},
                {"i", a.i},
                {"j", a.j.str()},
                {"D", collatz::to_string(a.boundary)},
                {"relation", collatz::to_string(a.relation)}};
}

int cmd_classify(const std::string& single, const std::string& range,
                 const std::string& format) {
    try {
        std::vector<std::pair<Natural, collatz::RestartAnalysis>> results;
        Natural from, to;
        if (!range.empty()) {
            const auto dots = range.find("..");
            if (dots == std::string::npos) return domain_error("--range expects A..B");
            from = require_natural(range.substr(0, dots));
            to = require_natural(range.substr(dots + 2));
            if (from < 1 || from > to) return domain_error("--range expects 1 <= A <= B");
            for (Natural term = from; term <= to; ++term)
                results.emplace_back(term, collatz::analyze_restart(term));
        } else {
            const Natural term = require_natural(single);
            from = to = term;
            results.emplace_back(term, collatz::analyze_restart(term));
        }

        if (format == "json") {
            if (range.empty()) {
                print_json(classify_json(results[0].first, results[0].second));
            } else {
                Json j;
                j["from"] = from.str();
                j["to"] = to.str();
                j["results"] = Json::array();
                for (const auto& [term, a] : results)
                    j["results"].push_back(classify_json(term, a));
                print_json(j);
            }
        } else if (format == "csv") {
            for (const auto& [term, a] : results)
                std::cout << term.str() << "," << collatz::to_string(a.relation) << ","
                          << a.j.str() << "," << collatz::to_string(a.boundary) << "\n";
        } else {
            for (const auto& [term, a] : results) {
                if (!range.empty()) std::cout << "J=" << term.str() << " ";
                std::cout << collatz::to_string(a.relation) << ": j=" << collatz::elide(a.j)
                          << " " << relation_op(a.relation)
                          << " D=" << collatz::elide(collatz::to_string(a.boundary)) << "\n";
            }
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return domain_error(e.what());
    }
}

// ---- search ----

struct SearchOpts {
    std::uint64_t bound1 = 0;
    std::uint64_t bound2 = 0;
    std::string checkpoint;
    unsigned workers = 0;
    std::uint64_t max_cells = 0;
    bool timing = false;
    std::string format = "json";
};

int emit_search_report(const collatz::SearchReport& report, const SearchOpts& opt) {
    // Any nontrivial find is worth shouting about.
    for (const auto& s : report.appendix_solutions)
        if (!(s.a == 1 && s.b == 1 && s.c == 13))
            std::cerr << "WARNING: unexpected appendix solution a=" << s.a << " b=" << s.b
                      << " c=" << s.c.str() << "\n";
    for (const auto& s : report.unified_solutions)
        if (!s.trivial())
            std::cerr << "WARNING: nontrivial strand cycle witness i=" << s.i << " k=" << s.k
                      << " j=" << s.j.str() << " (J=" << s.termination_column().str() << ")\n";
    std::cerr << "elapsed: " << report.elapsed_ms << " ms\n";

    if (opt.format == "text") {
        std::cout << collatz::to_string(report.kind) << " search, scanned " << report.scanned
                  << " cells, " << (report.complete ? "complete" : "interrupted") << "\n";
        if (report.kind == collatz::SearchKind::Appendix) {
            for (const auto& s : report.appendix_solutions)
                std::cout << "solution a=" << s.a << " b=" << s.b << " c=" << s.c.str()
                          << (s.well_formed ? " well-formed" : " ill-formed")
                          << (s.strand_cycle ? " strand-cycle" : "") << "\n";
        } else {
            for (const auto& s : report.unified_solutions)
                std::cout << "solution i=" << s.i << " k=" << s.k << " j=" << s.j.str()
                          << (s.trivial() ? " (trivial)" : "") << "\n";
        }
    } else {
        print_json(collatz::report_to_json(report, opt.timing));
    }
    return report.complete ? kExitOk : kExitBudget;
}

int cmd_search(collatz::SearchKind kind, const SearchOpts& opt) {
    if (opt.bound1 < 1 || (kind == collatz::SearchKind::Appendix && opt.bound2 < 1))
        return domain_error("search bounds must be >= 1");
    collatz::SearchOptions options;
    options.workers = opt.workers == 0 ? default_workers() : opt.workers;
    options.max_cells = opt.max_cells;
    options.checkpoint_path = opt.checkpoint;
    try {
        const collatz::SearchReport report =
            kind == collatz::SearchKind::Appendix
                ? collatz::appendix_search(opt.bound1, opt.bound2, options)
                : collatz::unified_cycle_search(opt.bound1, opt.bound2, options);
        return emit_search_report(report, opt);
    } catch (const std::exception& e) {
        return domain_error(e.what());
    }
}

// ---- verify ----

int cmd_verify(const std::string& suite_name, std::uint64_t bound, const std::string& format) {
    std::vector<const collatz::Suite*> selected;
    if (suite_name == "all") {
        for (const auto& s : collatz::verification_suites()) selected.push_back(&s);
    } else if (const collatz::Suite* s = collatz::find_suite(suite_name)) {
        selected.push_back(s);
    } else {
        std::cerr << "error: unknown suite: " << suite_name << "\nknown suites:\n";
        for (const auto& s : collatz::verification_suites()) {
            std::cerr << "  " << s.name;
            for (const auto& a : s.aliases) std::cerr << " (" << a << ")";
            std::cerr << "\n";
        }
        return kExitDomain;
    }

    bool all_pass = true;
    Json suites_json = Json::array();
    for (const collatz::Suite* suite : selected) {
        const auto results = suite->run(bound);
        Json props = Json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            if (format == "json") {
                Json p{{"name", r.name}, {"pass", r.pass}, {"checked", r.checked}};
                if (!r.pass) p["first_failure"] = r.detail;
                props.push_back(std::move(p));
            } else {
                std::cout << (r.pass ? "PASS " : "FAIL ") << suite->name << "/" << r.name
                          << " (checked " << r.checked << ")";
                if (!r.pass) std::cout << " first failure: " << r.detail;
                std::cout << "\n";
            }
        }
        if (format == "json")
            suites_json.push_back(Json{{"suite", suite->name}, {"properties", props}});
    }
    if (format == "json") {
        Json out;
        out["bound"] = bound;
        out["pass"] = all_pass;
        out["suites"] = suites_json;
        print_json(out);
    } else {
        std::cout << (all_pass ? "all properties hold" : "INVARIANT VIOLATION") << "\n";
    }
    return all_pass ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collatz trajectory, coordinate, and cycle-search toolkit"};
    app.require_subcommand(1);

    // trace
    TraceOpts trace_opt;
    auto* trace = app.add_subcommand("trace", "iterate the map on n until it reaches 1");
    trace->add_option("n", trace_opt.n, "start value (decimal or 0x hex)")->required();
    trace->add_option("--max-steps", trace_opt.max_steps, "step budget");
    trace->add_option("--format", trace_opt.format)
        ->check(CLI::IsMember({"text", "json"}));

    // coords
    std::string coords_n, coords_format = "text";
    auto* coords = app.add_subcommand("coords", "coordinates (i, j) of an odd number");
    coords->add_option("n", coords_n)->required();
    coords->add_option("--format", coords_format)->check(CLI::IsMember({"text", "json"}));

    // table
    std::uint64_t table_rows = 5, table_cols = 6;
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "grid of the numbers at (i, j)");
    table->add_option("--rows", table_rows)->required();
    table->add_option("--cols", table_cols)->required();
    table->add_option("--format", table_format)
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // diagram
    std::uint64_t diagram_rows = 9, diagram_cols = 43;
    std::string diagram_trajectory, diagram_format = "ascii";
    auto* diagram = app.add_subcommand("diagram", "dot diagram with optional trajectory");
    diagram->add_option("--rows", diagram_rows)->required();
    diagram->add_option("--cols", diagram_cols)->required();
    diagram->add_option("--trajectory", diagram_trajectory, "start coordinate i,j");
    diagram->add_option("--format", diagram_format)->check(CLI::IsMember({"ascii", "svg"}));

    // reduce
    std::string reduce_n, reduce_format = "text";
    std::uint64_t reduce_rounds = collatz::kDefaultReduceRounds;
    auto* reduce = app.add_subcommand("reduce", "iterated row reductions from an odd start");
    reduce->add_option("n", reduce_n)->required();
    reduce->add_option("--rounds", reduce_rounds, "row-reduction budget");
    reduce->add_option("--format", reduce_format)->check(CLI::IsMember({"text", "json"}));

    // classify
    std::string classify_j, classify_range, classify_format = "text";
    auto* classify =
        app.add_subcommand("classify", "restart position relative to the boundary");
    classify->add_option("J", classify_j, "termination column");
    classify->add_option("--range", classify_range, "inclusive range A..B");
    classify->add_option("--format", classify_format)
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // search
    auto* search = app.add_subcommand("search", "Diophantine cycle searches");
    search->require_subcommand(1);
    SearchOpts appendix_opt, unified_opt;
    auto* appendix = search->add_subcommand("appendix", "3^a - 2^b (2^a - 1) divisor scan");
    appendix->add_option("--a-max", appendix_opt.bound1)->required();
    appendix->add_option("--b-max", appendix_opt.bound2)->required();
    appendix->add_option("--checkpoint", appendix_opt.checkpoint);
    appendix->add_option("--workers", appendix_opt.workers);
    appendix->add_option("--max-cells", appendix_opt.max_cells,
                         "stop after visiting this many cells");
    appendix->add_flag("--timing", appendix_opt.timing, "include elapsed_ms in the report");
    appendix->add_option("--format", appendix_opt.format)
        ->check(CLI::IsMember({"json", "text"}));
    auto* unified = search->add_subcommand("unified", "consolidated strand-cycle equation scan");
    unified->add_option("--i-max", unified_opt.bound1)->required();
    unified->add_option("--k-max", unified_opt.bound2)->required();
    unified->add_option("--checkpoint", unified_opt.checkpoint);
    unified->add_option("--workers", unified_opt.workers);
    unified->add_option("--max-cells", unified_opt.max_cells);
    unified->add_flag("--timing", unified_opt.timing);
    unified->add_option("--format", unified_opt.format)
        ->check(CLI::IsMember({"json", "text"}));

    // verify
    std::string verify_suite = "all", verify_format = "text";
    std::uint64_t verify_bound = 1000;
    auto* verify = app.add_subcommand("verify", "run a named property suite");
    verify->add_option("--suite", verify_suite, "suite name, lemma alias, or 'all'");
    verify->add_option("--bound", verify_bound, "sweep bound");
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (trace->parsed()) return cmd_trace(trace_opt);
    if (coords->parsed()) return cmd_coords(coords_n, coords_format);
    if (table->parsed()) return cmd_table(table_rows, table_cols, table_format);
    if (diagram->parsed())
        return cmd_diagram(diagram_rows, diagram_cols, diagram_trajectory, diagram_format);
    if (reduce->parsed()) return cmd_reduce(reduce_n, reduce_rounds, reduce_format);
    if (classify->parsed()) {
        if (classify_j.empty() && classify_range.empty()) {
            std::cerr << "error: classify needs J or --range\n";
            return kExitUsage;
        }
        return cmd_classify(classify_j, classify_range, classify_format);
    }
    if (appendix->parsed()) return cmd_search(collatz::SearchKind::Appendix, appendix_opt);
    if (unified->parsed()) return cmd_search(collatz::SearchKind::Unified, unified_opt);
    if (verify->parsed()) return cmd_verify(verify_suite, verify_bound, verify_format);
    return kExitUsage;
}
