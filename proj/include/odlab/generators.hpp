#pragma once
// Named graph families used by the CLI and the test corpus.

#include <cstdint>
#include <string>
#include <vector>

#include "odlab/graph.hpp"

namespace odlab::gen {

Graph cycle(std::size_t n);     // C_n, n >= 3
Graph complete(std::size_t n);  // K_n
Graph empty(std::size_t n);     // no edges
Graph path(std::size_t n);      // P_n on n vertices
Graph star(std::size_t leaves); // K_{1,leaves}
Graph petersen();
// Kneser(n, k): k-subsets of [n], adjacent when disjoint. Labels "{1,2}".
Graph kneser(std::size_t n, std::size_t k);
// G(n, p) with a 64-bit Mersenne Twister seeded by `seed`; edges drawn in (u,v) lexicographic order.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

// Builds a graph from a spec such as "cycle 5", "kneser 5 2", "random 8 0.5 42".
Graph by_name(const std::string& name, const std::vector<std::string>& args);

}  // namespace odlab::gen
