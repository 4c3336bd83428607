#pragma once
// Target graphs O(F,k) and O'(F,k); exact orthogonality dimension and minrank
// with verified witnesses.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "odlab/coloring.hpp"
#include "odlab/gf.hpp"
#include "odlab/graph.hpp"

namespace odlab {

// A vector per vertex; adjacent vertices orthogonal, no vector self-orthogonal.
struct OrthRep {
    gf::Field field;
    std::size_t dim;
    std::vector<gf::Vector> vectors;
};

// Square matrix indexed by vertices: nonzero diagonal, zero on non-adjacent pairs.
struct ReprMatrix {
    gf::Matrix matrix;
    std::size_t rank;
};

using VectorPair = std::pair<gf::Vector, gf::Vector>;

struct VectorGraph {
    Graph graph;
    std::vector<gf::Vector> vectors;  // vectors[i] labels vertex i
};

struct PairGraph {
    Graph graph;
    std::vector<VectorPair> pairs;
};

struct TargetGuard {
    std::uint64_t max_vertices = 25'000;
};

// All non-self-orthogonal vectors of F^k; distinct orthogonal vectors adjacent.
VectorGraph build_O(gf::Field field, std::size_t k, TargetGuard guard = {});
// Projective quotient: one representative per line (leading coordinate 1).
// G -> O(F,k) exists iff G -> build_O_projective(F,k) exists.
VectorGraph build_O_projective(gf::Field field, std::size_t k, TargetGuard guard = {});

// All pairs (u,w) with <u,w> != 0; distinct pairs adjacent iff <u1,w2> = <u2,w1> = 0.
PairGraph build_Oprime(gf::Field field, std::size_t k, TargetGuard guard = {});
// Quotient by (u,w) ~ (a u, a^{-1} w): u has leading coordinate 1.
PairGraph build_Oprime_projective(gf::Field field, std::size_t k, TargetGuard guard = {});

bool verify_orth_rep(const Graph& g, const OrthRep& rep);
bool verify_repr_matrix(const Graph& g, const ReprMatrix& m);

enum class ParamStatus {
    exact,    // value is exact, witness attached
    exceeds,  // no witness for any k <= k_max
    unknown,  // a search ran out of budget or hit a guard
};

const char* to_string(ParamStatus s) noexcept;

struct ParamOptions {
    std::size_t k_max = 8;
    SearchLimits limits{};
    TargetGuard guard{};
};

struct OdResult {
    ParamStatus status = ParamStatus::unknown;
    std::size_t k = 0;
    std::size_t lower_bound = 0;  // clique number of G
    std::optional<OrthRep> rep;
    std::string note;
};

struct MinrankResult {
    ParamStatus status = ParamStatus::unknown;
    std::size_t k = 0;
    std::size_t lower_bound = 0;  // clique number of the complement
    std::optional<ReprMatrix> matrix;
    std::vector<VectorPair> pairs;  // (u_i, w_i) with M_ij = <u_i, w_j>
    std::string note;
};

OdResult orthogonality_dimension(const Graph& g, gf::Field field, const ParamOptions& opts = {});
MinrankResult minrank(const Graph& g, gf::Field field, const ParamOptions& opts = {});

// M_ij = <u_i, w_j>.
gf::Matrix gram_matrix(gf::Field field, std::size_t n, const std::vector<VectorPair>& pairs);

}  // namespace odlab
