#pragma once
// Exact chromatic number, generic homomorphism search, and the coloring
// transfer between a graph G and the underlying graph H of its line digraph.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "odlab/errors.hpp"
#include "odlab/graph.hpp"

namespace odlab {

using BigInt = boost::multiprecision::cpp_int;

// Vertex -> color in [0, palette).
struct Coloring {
    std::vector<std::uint32_t> colors;
    std::uint32_t palette = 0;

    // Number of distinct colors actually used.
    std::uint32_t used() const;
};

// Total map from source vertices to target vertices.
struct Homomorphism {
    std::vector<Vertex> map;
};

// Central binomial coefficient C(n, floor(n/2)); b(0) = 1.
BigInt central_binomial(unsigned n);
// Smallest n >= 0 with chi <= b(n).
unsigned min_n_with_b_at_least(std::uint64_t chi);

bool verify_coloring(const Graph& g, const Coloring& c);
bool verify_homomorphism(const Graph& source, const Graph& target, const Homomorphism& h);

struct ChromaticOptions {
    std::size_t max_vertices = 80;
    SearchLimits limits{};
};

struct ChromaticResult {
    SearchStatus status = SearchStatus::unknown;  // found: `k` is exact
    std::uint32_t k = 0;                          // exact value, or best upper bound when unknown
    std::uint32_t lower_bound = 0;
    Coloring coloring;
    // "exhausted" when a (k-1)-coloring search ran to completion, "clique" when
    // only the clique bound certifies minimality, "trivial" for k <= 1.
    std::string minimality;
    std::uint64_t nodes = 0;

    bool exact() const noexcept { return status == SearchStatus::found; }
};

// Throws GuardExceeded when |V| > max_vertices.
ChromaticResult chromatic_number(const Graph& g, const ChromaticOptions& opts = {});

// k-colorability by DSATUR backtracking. Found -> proper k-coloring in `coloring`.
struct ColorabilityResult {
    SearchStatus status = SearchStatus::unknown;
    Coloring coloring;
    std::uint64_t nodes = 0;
};
ColorabilityResult k_colorable(const Graph& g, std::uint32_t k, const SearchLimits& limits = {});

// Greedy DSATUR coloring (no backtracking).
Coloring greedy_dsatur(const Graph& g);

struct HomOptions {
    SearchLimits limits{};
    std::uint64_t max_product = 100'000'000;  // guard on |V(G)| * |V(T)|
    // The target is vertex-transitive: the first vertex of every connected
    // component of the source may be pinned to target vertex 0.
    bool vertex_transitive_target = false;
};

struct HomResult {
    SearchStatus status = SearchStatus::unknown;
    Homomorphism hom;
    std::uint64_t nodes = 0;
};

// Backtracking with forward checking and smallest-domain-first ordering;
// candidates tried in ascending target order, so the first witness is deterministic.
HomResult find_homomorphism(const Graph& source, const Graph& target, const HomOptions& opts = {});

// Proper n-coloring of H from a proper coloring of G with palette <= b(n):
// color i -> i-th floor(n/2)-subset of [n] in lexicographic order, and arc (x,y)
// gets min(A_{c(x)} \ A_{c(y)}). Vertex order follows line_digraph(g).
Coloring lift_coloring_to_line(const Graph& g, const Coloring& c, unsigned n);

// Proper coloring of G from a proper n-coloring of H: y gets the set
// {phi(x,y)} over in-arcs, encoded as a bitmask, palette 2^n (n <= 31).
Coloring set_coloring_from_line(const Graph& g, const Coloring& phi, unsigned n);

}  // namespace odlab
