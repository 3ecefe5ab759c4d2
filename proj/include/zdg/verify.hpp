#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/zdgraph.hpp"

// Cross-validation harness: runs the closed-form and brute-force engines
// side by side over a range of moduli and reports every disagreement
// verbatim. Deterministic regardless of parallelism.
namespace zdg::verify {

enum class CheckKind {
    CutEdges,       // cut_edges(m) == bridges(g)
    Center,         // theorem center == BFS center
    Degree,         // closed-form degree == |neighbors| for every vertex
    Diameter,       // theorem diameter == BFS diameter where covered
    Connectivity,   // graph connected with diameter <= 3
    PrimeDistance,  // d(p, q) == 3 for every eligible prime pair
};

inline constexpr std::array<CheckKind, 6> kAllChecks = {
    CheckKind::CutEdges,  CheckKind::Center,       CheckKind::Degree,
    CheckKind::Diameter,  CheckKind::Connectivity, CheckKind::PrimeDistance,
};

std::string_view to_string(CheckKind kind);
std::optional<CheckKind> parse_check(std::string_view name);

enum class Status {
    Agree,
    Disagree,
    Skipped,  // the theorem side does not cover this n (never an error)
};

struct NResult {
    std::uint64_t n = 0;
    Status status = Status::Agree;
    std::string detail;  // skip reason or disagreement summary
};

struct Discrepancy {
    std::uint64_t n = 0;
    std::string theorem_answer;
    std::string oracle_answer;
};

struct Report {
    CheckKind check{};
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;
    std::uint64_t agree = 0;
    std::uint64_t disagree = 0;
    std::uint64_t skipped = 0;
    std::vector<NResult> per_n;             // one entry per n, ascending
    std::vector<Discrepancy> discrepancies; // ascending by n
};

// Single check over [n_min, n_max]. Requires 2 <= n_min <= n_max <= oracle_cap.
Report run_check(std::uint64_t n_min, std::uint64_t n_max, CheckKind check,
                 std::uint64_t oracle_cap = ZdGraph::kDefaultOracleCap);

// All requested checks over the range, sharing one graph per n. Moduli are
// distributed over `parallelism` threads by stride and merged back in index
// order, so the output is byte-for-byte independent of the thread count.
std::vector<Report> run_suite(std::uint64_t n_min, std::uint64_t n_max,
                              std::span<const CheckKind> checks, unsigned parallelism,
                              std::uint64_t oracle_cap = ZdGraph::kDefaultOracleCap);

} // namespace zdg::verify
