#pragma once
// Graph reductions and the full consistency report for one input graph.

#include <cstdint>
#include <string>
#include <vector>

#include "odlab/graph.hpp"
#include "odlab/witness.hpp"

namespace odlab {

enum class ReductionTarget { od, minrank, index_coding };

ReductionTarget parse_reduction_target(const std::string& s);  // "od" | "minrank" | "ic"
const char* to_string(ReductionTarget t) noexcept;

struct ReductionOutput {
    ReductionTarget target;
    Graph graph;                      // H for od, complement of H otherwise
    std::vector<ArcVertex> provenance;  // vertex i of `graph` comes from this arc of G
};

ReductionOutput reduce(const Graph& g, ReductionTarget target);

struct ReportOptions {
    std::vector<std::uint32_t> fields{2};
    std::size_t jobs = 1;
    // Node budget for each parameter search; lower bounds fall back to cliques.
    std::uint64_t node_budget = 2'000'000;
    std::size_t k_max = 8;
    std::size_t chi_max_vertices = 80;
    // Largest H for which the index-code pipeline runs (2^vertices messages).
    std::size_t index_max_vertices = 20;
};

// Check statuses: "PASS", "FAIL", "UNKNOWN" (guard or budget), "REPORTED" (no threshold to assert).
witness::Json paper_report(const Graph& g, const ReportOptions& opts = {});

// Tally of check statuses in a report.
struct ReportTally {
    std::size_t pass = 0, fail = 0, unknown = 0, reported = 0;
};
ReportTally tally(const witness::Json& report);

}  // namespace odlab
