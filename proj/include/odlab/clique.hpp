#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "odlab/errors.hpp"
#include "odlab/graph.hpp"

namespace odlab {

struct CliqueResult {
    SearchStatus status = SearchStatus::unknown;  // found: `vertices` is a maximum clique
    std::vector<Vertex> vertices;                 // ascending; best found so far when unknown
    std::uint64_t nodes = 0;
};

struct CliqueOptions {
    std::size_t max_vertices = 5000;
    SearchLimits limits{};
};

// Branch and bound with a greedy-coloring bound (Tomita-style), bitset based.
CliqueResult max_clique(const Graph& g, const CliqueOptions& opts = {});

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);

// Bron–Kerbosch with pivoting. Calls `visit` for every maximal clique (ascending
// vertex lists); stops early when `visit` returns false. Returns the number visited.
std::uint64_t for_each_maximal_clique(const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& visit);

}  // namespace odlab
