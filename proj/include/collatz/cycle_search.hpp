#pragma once
// Big-integer Diophantine searches for within-strand cycles.
//
// Two engines over exact arithmetic:
//   appendix : 3^a - 2^b (2^a - 1) = (4*3^a + 1) / c, scanned verbatim with
//              a positivity skip; solutions annotated with the c = 5 (mod 6)
//              well-formedness filter and, independently, with whether they
//              satisfy the consolidated strand-cycle equation below.
//   unified  : (2j+1) (2^(i+k+1) - 3^i) = 2^(k+1) - 1, the consolidation of
//              the on-boundary restart condition with the synthesis of J;
//              a restart lands on its own boundary iff (2j+1) 3^(i-1) = 2J+1,
//              which clears to this form. Solutions imply a cycle at
//              J = ((2j+1) 3^(i-1) - 1) / 2.
//
// Scans are partitioned by the first variable; partitions are handed to
// workers and merged in partition order, so reports are byte-identical
// across runs, worker counts, and interrupt/resume.

#include "collatz/natural.hpp"
#include "collatz/trajectory.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace collatz {

struct CorruptCheckpoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundsMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AppendixSolution {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    Natural c;
    bool well_formed = false;   // c = 5 (mod 6)
    bool strand_cycle = false;  // satisfies the consolidated equation

    bool operator==(const AppendixSolution&) const = default;
};

struct UnifiedSolution {
    std::uint64_t i = 1;
    std::uint64_t k = 0;
    Natural j;

    bool operator==(const UnifiedSolution&) const = default;

    // J of the cycle this solution would witness.
    Natural termination_column() const { return ((2 * j + 1) * pow3(i - 1) - 1) / 2; }
    bool trivial() const { return i == 1 && k == 0 && j == 0; }
};

enum class SearchKind { Appendix, Unified };

inline const char* to_string(SearchKind k) {
    return k == SearchKind::Appendix ? "appendix" : "unified";
}

struct Cursor {
    std::uint64_t partition = 1;  // value of a (appendix) or i (unified)
    std::uint64_t offset = 0;     // cells consumed inside that partition

    bool operator==(const Cursor&) const = default;
};

struct SearchOptions {
    unsigned workers = 1;
    std::uint64_t max_cells = 0;  // stop after visiting this many cells; 0 = no cap
    std::string checkpoint_path;  // empty = no checkpointing
    std::uint64_t checkpoint_cell_cadence = std::uint64_t(1) << 16;
    double checkpoint_seconds = 5.0;
};

struct SearchReport {
    SearchKind kind = SearchKind::Appendix;
    std::uint64_t bound1 = 0;  // a_max or i_max
    std::uint64_t bound2 = 0;  // b_max or k_max
    std::vector<AppendixSolution> appendix_solutions;
    std::vector<UnifiedSolution> unified_solutions;
    std::uint64_t scanned = 0;  // cells that passed the skip filter
    Cursor cursor;              // one past the last consumed cell
    bool complete = true;
    double elapsed_ms = 0.0;    // wall time; serialized only on request
};

constexpr std::uint64_t kMaxSearchBound = std::uint64_t(1) << 20;

inline const char* kAppendixDivisorNote =
    "well-formed divisors satisfy c = 5 (mod 6); the consolidated strand-cycle "
    "equation expects multiplier residue 1 (mod 6) for odd-row candidates and is "
    "checked per solution as strand_cycle; the two filters are reported side by "
    "side, never reconciled";

// ---- serialization ----

namespace detail {

using Json = nlohmann::ordered_json;

inline Json to_json(const AppendixSolution& s) {
    Json j;
    j["a"] = s.a;
    j["b"] = s.b;
    j["c"] = s.c.str();
    j["well_formed"] = s.well_formed;
    j["strand_cycle"] = s.strand_cycle;
    return j;
}

inline Json to_json(const UnifiedSolution& s, bool annotated) {
    Json out;
    out["i"] = s.i;
    out["k"] = s.k;
    out["j"] = s.j.str();
    if (annotated) {
        out["termination_column"] = s.termination_column().str();
        out["trivial"] = s.trivial();
    }
    return out;
}

inline Json bounds_json(SearchKind kind, std::uint64_t b1, std::uint64_t b2) {
    Json j;
    if (kind == SearchKind::Appendix) {
        j["a_max"] = b1;
        j["b_max"] = b2;
    } else {
        j["i_max"] = b1;
        j["k_max"] = b2;
    }
    return j;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const SearchReport& r, bool include_timing = false) {
    detail::Json j;
    j["kind"] = to_string(r.kind);
    j["bounds"] = detail::bounds_json(r.kind, r.bound1, r.bound2);
    j["scanned"] = r.scanned;
    j["complete"] = r.complete;
    j["cursor"] = {{"partition", r.cursor.partition}, {"offset", r.cursor.offset}};
    j["solutions"] = detail::Json::array();
    if (r.kind == SearchKind::Appendix) {
        for (const auto& s : r.appendix_solutions) j["solutions"].push_back(detail::to_json(s));
        j["notes"] = detail::Json::array({kAppendixDivisorNote});
    } else {
        for (const auto& s : r.unified_solutions)
            j["solutions"].push_back(detail::to_json(s, true));
    }
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

// ---- scan internals ----

namespace detail {

struct PartitionOutcome {
    std::vector<std::uint64_t> scanned_offsets;
    std::vector<std::pair<std::uint64_t, AppendixSolution>> asols;
    std::vector<std::pair<std::uint64_t, UnifiedSolution>> usols;
};

// Scans one appendix partition (fixed a, all b). L = 3^a - 2^b (2^a - 1)
// decreases with b, so cells after the first nonpositive L are skipped
// without touching big-integer division.
inline PartitionOutcome scan_appendix_partition(std::uint64_t a, std::uint64_t b_max) {
    PartitionOutcome out;
    const Natural p3 = pow3(a);
    const Natural mersenne = pow2(a) - 1;
    const Natural target = 4 * p3 + 1;
    for (std::uint64_t b = 1; b <= b_max; ++b) {
        const Natural subtrahend = mersenne << b;
        if (subtrahend >= p3) break;  // L <= 0 from here on
        const Natural left = p3 - subtrahend;
        out.scanned_offsets.push_back(b - 1);
        if (target % left == 0) {
            AppendixSolution sol;
            sol.a = a;
            sol.b = b;
            sol.c = target / left;
            sol.well_formed = (sol.c % 6 == 5);
            sol.strand_cycle = (sol.c * (pow2(a + b) - p3) == pow2(b) - 1);
            out.asols.emplace_back(b - 1, std::move(sol));
        }
    }
    return out;
}

// Scans one unified partition (fixed i, all k). A cell is tested only when
// 0 < d <= 2^(k+1) - 1 with d = 2^(i+k+1) - 3^i; outside that window d
// cannot divide 2^(k+1) - 1.
inline PartitionOutcome scan_unified_partition(std::uint64_t i, std::uint64_t k_max) {
    PartitionOutcome out;
    const Natural p3 = pow3(i);
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        const Natural power = pow2(i + k + 1);
        if (power <= p3) continue;
        const Natural d = power - p3;
        const Natural target = pow2(k + 1) - 1;
        if (d > target) break;  // d outgrows the target for every larger k
        out.scanned_offsets.push_back(k);
        if (target % d == 0) {
            const Natural q = target / d;  // odd: both operands are odd
            out.usols.emplace_back(k, UnifiedSolution{i, k, (q - 1) / 2});
        }
    }
    return out;
}

struct Checkpoint {
    SearchKind kind = SearchKind::Appendix;
    std::uint64_t bound1 = 0;
    std::uint64_t bound2 = 0;
    Cursor cursor;
    std::vector<AppendixSolution> appendix_solutions;
    std::vector<UnifiedSolution> unified_solutions;
    std::uint64_t scanned = 0;
};

inline void write_checkpoint(const std::string& path, const Checkpoint& cp) {
    Json j;
    j["version"] = 1;
    j["kind"] = to_string(cp.kind);
    j["bounds"] = bounds_json(cp.kind, cp.bound1, cp.bound2);
    j["cursor"] = {{"partition", cp.cursor.partition}, {"offset", cp.cursor.offset}};
    j["solutions"] = Json::array();
    if (cp.kind == SearchKind::Appendix) {
        for (const auto& s : cp.appendix_solutions) j["solutions"].push_back(to_json(s));
    } else {
        for (const auto& s : cp.unified_solutions) j["solutions"].push_back(to_json(s, false));
    }
    j["scanned"] = cp.scanned;
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
        out << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, path);
}

inline Natural natural_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw CorruptCheckpoint(std::string("missing field: ") + key);
    const auto& v = j.at(key);
    if (v.is_number_unsigned()) return Natural(v.get<std::uint64_t>());
    if (v.is_string()) {
        auto parsed = parse_natural(v.get<std::string>());
        if (parsed) return *parsed;
    }
    throw CorruptCheckpoint(std::string("bad numeric field: ") + key);
}

inline Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorruptCheckpoint("checkpoint not readable: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw CorruptCheckpoint(std::string("checkpoint parse error: ") + e.what());
    }
    try {
        if (!j.is_object() || j.at("version").get<int>() != 1)
            throw CorruptCheckpoint("unsupported checkpoint version");
        Checkpoint cp;
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "appendix") cp.kind = SearchKind::Appendix;
        else if (kind == "unified") cp.kind = SearchKind::Unified;
        else throw CorruptCheckpoint("unknown checkpoint kind: " + kind);
        const auto& bounds = j.at("bounds");
        if (cp.kind == SearchKind::Appendix) {
            cp.bound1 = bounds.at("a_max").get<std::uint64_t>();
            cp.bound2 = bounds.at("b_max").get<std::uint64_t>();
        } else {
            cp.bound1 = bounds.at("i_max").get<std::uint64_t>();
            cp.bound2 = bounds.at("k_max").get<std::uint64_t>();
        }
        cp.cursor.partition = j.at("cursor").at("partition").get<std::uint64_t>();
        cp.cursor.offset = j.at("cursor").at("offset").get<std::uint64_t>();
        cp.scanned = j.at("scanned").get<std::uint64_t>();
        for (const auto& s : j.at("solutions")) {
            if (cp.kind == SearchKind::Appendix) {
                AppendixSolution sol;
                sol.a = s.at("a").get<std::uint64_t>();
                sol.b = s.at("b").get<std::uint64_t>();
                sol.c = natural_field(s, "c");
                sol.well_formed = s.at("well_formed").get<bool>();
                sol.strand_cycle = s.at("strand_cycle").get<bool>();
                cp.appendix_solutions.push_back(std::move(sol));
            } else {
                UnifiedSolution sol;
                sol.i = s.at("i").get<std::uint64_t>();
                sol.k = s.at("k").get<std::uint64_t>();
                sol.j = natural_field(s, "j");
                cp.unified_solutions.push_back(std::move(sol));
            }
        }
        const std::uint64_t cells =
            cp.kind == SearchKind::Appendix ? cp.bound2 : cp.bound2 + 1;
        if (cp.cursor.partition < 1 || cp.cursor.partition > cp.bound1 + 1 ||
            cp.cursor.offset > cells)
            throw CorruptCheckpoint("checkpoint cursor out of range");
        return cp;
    } catch (const CorruptCheckpoint&) {
        throw;
    } catch (const std::exception& e) {
        throw CorruptCheckpoint(std::string("malformed checkpoint: ") + e.what());
    }
}

// Runs the partitioned scan from a starting state. Workers race over
// partitions but results are consumed strictly in partition order, with a
// bounded lookahead window so memory stays flat.
inline SearchReport run_search(SearchKind kind, std::uint64_t bound1, std::uint64_t bound2,
                               const SearchOptions& opts, const Checkpoint* start) {
    if (bound1 < 1 || bound2 < (kind == SearchKind::Appendix ? 1u : 0u))
        throw std::invalid_argument("search bounds must be >= 1");
    if (bound1 > kMaxSearchBound || bound2 > kMaxSearchBound)
        throw DimensionCap("search bounds capped at 2^20 per dimension");

    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t cells_per_partition =
        kind == SearchKind::Appendix ? bound2 : bound2 + 1;

    SearchReport report;
    report.kind = kind;
    report.bound1 = bound1;
    report.bound2 = bound2;

    Cursor at{1, 0};
    if (start) {
        at = start->cursor;
        report.scanned = start->scanned;
        report.appendix_solutions = start->appendix_solutions;
        report.unified_solutions = start->unified_solutions;
    }
    // Normalize a cursor that stopped exactly at a partition boundary.
    if (at.offset >= cells_per_partition) {
        at.partition += 1;
        at.offset = 0;
    }

    const unsigned workers = opts.workers == 0 ? 1 : opts.workers;
    const std::uint64_t window = std::uint64_t(workers) * 4 + 4;

    std::mutex mx;
    std::condition_variable cv;
    std::map<std::uint64_t, PartitionOutcome> ready;
    std::atomic<std::uint64_t> next_partition{at.partition};
    std::atomic<std::uint64_t> consumed_frontier{at.partition};
    std::atomic<bool> stop{false};

    auto scan_one = [&](std::uint64_t p) {
        return kind == SearchKind::Appendix ? scan_appendix_partition(p, bound2)
                                            : scan_unified_partition(p, bound2);
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::uint64_t p = next_partition.fetch_add(1);
                if (p > bound1 || stop.load()) return;
                {
                    std::unique_lock<std::mutex> lock(mx);
                    cv.wait(lock, [&] {
                        return stop.load() || p < consumed_frontier.load() + window;
                    });
                    if (stop.load()) return;
                }
                PartitionOutcome outcome = scan_one(p);
                {
                    std::lock_guard<std::mutex> lock(mx);
                    ready.emplace(p, std::move(outcome));
                }
                cv.notify_all();
            }
        });
    }

    std::uint64_t cells_consumed = 0;  // cells visited by this run
    std::uint64_t cells_since_checkpoint = 0;
    auto last_checkpoint = t0;
    bool interrupted = false;

    auto maybe_checkpoint = [&](bool force) {
        if (opts.checkpoint_path.empty()) return;
        const auto now = std::chrono::steady_clock::now();
        const double secs = std::chrono::duration<double>(now - last_checkpoint).count();
        if (!force && cells_since_checkpoint < opts.checkpoint_cell_cadence &&
            secs < opts.checkpoint_seconds)
            return;
        Checkpoint cp;
        cp.kind = kind;
        cp.bound1 = bound1;
        cp.bound2 = bound2;
        cp.cursor = at;
        cp.appendix_solutions = report.appendix_solutions;
        cp.unified_solutions = report.unified_solutions;
        cp.scanned = report.scanned;
        write_checkpoint(opts.checkpoint_path, cp);
        cells_since_checkpoint = 0;
        last_checkpoint = now;
    };

    while (at.partition <= bound1) {
        PartitionOutcome outcome;
        {
            std::unique_lock<std::mutex> lock(mx);
            cv.wait(lock, [&] { return ready.count(at.partition) != 0; });
            outcome = std::move(ready.at(at.partition));
            ready.erase(at.partition);
        }

        std::uint64_t limit = cells_per_partition;
        if (opts.max_cells > 0) {
            const std::uint64_t left = opts.max_cells - cells_consumed;
            if (cells_per_partition - at.offset > left) limit = at.offset + left;
        }
        for (std::uint64_t off : outcome.scanned_offsets)
            if (off >= at.offset && off < limit) ++report.scanned;
        for (auto& [off, sol] : outcome.asols)
            if (off >= at.offset && off < limit)
                report.appendix_solutions.push_back(std::move(sol));
        for (auto& [off, sol] : outcome.usols)
            if (off >= at.offset && off < limit)
                report.unified_solutions.push_back(std::move(sol));

        const std::uint64_t consumed_now = limit - at.offset;
        cells_consumed += consumed_now;
        cells_since_checkpoint += consumed_now;

        if (limit < cells_per_partition) {
            at.offset = limit;
            interrupted = true;
            break;
        }
        at.partition += 1;
        at.offset = 0;
        consumed_frontier.store(at.partition);
        cv.notify_all();
        maybe_checkpoint(false);
    }

    stop.store(true);
    cv.notify_all();
    for (auto& t : pool) t.join();

    report.cursor = at;
    report.complete = !interrupted && at.partition > bound1;
    maybe_checkpoint(true);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace detail

// ---- public search surface ----

inline SearchReport appendix_search(std::uint64_t a_max, std::uint64_t b_max,
                                    const SearchOptions& opts = {}) {
    if (!opts.checkpoint_path.empty() && std::filesystem::exists(opts.checkpoint_path)) {
        const detail::Checkpoint cp = detail::load_checkpoint(opts.checkpoint_path);
        if (cp.kind != SearchKind::Appendix || cp.bound1 != a_max || cp.bound2 != b_max)
            throw BoundsMismatch("checkpoint was written by a different search");
        return detail::run_search(SearchKind::Appendix, a_max, b_max, opts, &cp);
    }
    return detail::run_search(SearchKind::Appendix, a_max, b_max, opts, nullptr);
}

inline SearchReport unified_cycle_search(std::uint64_t i_max, std::uint64_t k_max,
                                         const SearchOptions& opts = {}) {
    if (!opts.checkpoint_path.empty() && std::filesystem::exists(opts.checkpoint_path)) {
        const detail::Checkpoint cp = detail::load_checkpoint(opts.checkpoint_path);
        if (cp.kind != SearchKind::Unified || cp.bound1 != i_max || cp.bound2 != k_max)
            throw BoundsMismatch("checkpoint was written by a different search");
        return detail::run_search(SearchKind::Unified, i_max, k_max, opts, &cp);
    }
    return detail::run_search(SearchKind::Unified, i_max, k_max, opts, nullptr);
}

// Continues a previously checkpointed run; the final report is identical to
// an uninterrupted one.
inline SearchReport resume(const std::string& checkpoint_path, SearchOptions opts = {}) {
    const detail::Checkpoint cp = detail::load_checkpoint(checkpoint_path);
    if (opts.checkpoint_path.empty()) opts.checkpoint_path = checkpoint_path;
    return detail::run_search(cp.kind, cp.bound1, cp.bound2, opts, &cp);
}

// ---- exact oracle and consistency harness ----

inline bool oracle_on_boundary(const Natural& term_col) {
    return classify_restart(term_col) == Classification::On;
}

// Checks, for every J <= j_max, that the exact boundary oracle agrees with
// membership of J's extracted (i, j, k) in the unified equation's solution
// set. A disagreement would falsify the consolidation.
inline std::optional<Natural> cross_validate_disagreement(const Natural& j_max) {
    for (Natural term_col = 1; term_col <= j_max; ++term_col) {
        const StepResult step = collatz_step(term_col);
        const Coord c = coords(step.value);
        const Natural d = pow2(c.i + step.k + 1) - pow3(c.i);
        const bool solves = d > 0 && (2 * c.j + 1) * d == pow2(step.k + 1) - 1;
        if (solves != oracle_on_boundary(term_col)) return term_col;
    }
    return std::nullopt;
}

inline bool cross_validate(const Natural& j_max) {
    return !cross_validate_disagreement(j_max).has_value();
}

}  // namespace collatz
