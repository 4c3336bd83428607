#pragma once
// Subspace graphs S(F,n), S'(F,n) and the constructive translations between
// homomorphisms H -> O(F,n) / O'(F,n) and G -> S(F,n) / S'(F,n).

#include <utility>
#include <vector>

#include "odlab/algebraic.hpp"
#include "odlab/clique.hpp"
#include "odlab/gf.hpp"
#include "odlab/graph.hpp"

namespace odlab {

using SubspacePair = std::pair<gf::Subspace, gf::Subspace>;

struct SubspaceGraph {
    gf::Field field;
    std::size_t n;
    Graph graph;
    std::vector<gf::Subspace> subspaces;  // vertex i is subspaces[i]
};

struct SubspacePairGraph {
    gf::Field field;
    std::size_t n;
    Graph graph;
    std::vector<SubspacePair> pairs;  // ordered pairs, row-major over enumerate_subspaces
};

// Distinct U1, U2 with a non-self-orthogonal w in U1 ∩ U2^⊥ and one in U2 ∩ U1^⊥.
bool s_adjacent(const gf::Subspace& u1, const gf::Subspace& u2);
// Distinct (U1,W1), (U2,W2) with u in U1 ∩ W2^⊥, w in W1 ∩ U2^⊥, <u,w> != 0, and symmetrically.
bool sprime_adjacent(const SubspacePair& a, const SubspacePair& b);

SubspaceGraph build_S(gf::Field field, std::size_t n, gf::EnumerationGuard guard = {});
SubspacePairGraph build_Sprime(gf::Field field, std::size_t n, gf::EnumerationGuard guard = {3, 3});

// h: H -> O(F,n), indexed by line_digraph(g) vertex order. Returns g(y) = span{h(x,y)}.
// Throws InvalidWitness if h is not a homomorphism into O(F,n) or the result fails S-adjacency.
std::vector<gf::Subspace> hom_line_to_subspaces(const Graph& g, gf::Field field, std::size_t n,
                                                const std::vector<gf::Vector>& h);
// g: G -> S(F,n). Returns h(x,y) = first non-self-orthogonal vector of g(x) ∩ g(y)^⊥.
std::vector<gf::Vector> hom_subspaces_to_line(const Graph& g, const std::vector<gf::Subspace>& gmap);

// h: H -> O'(F,n). Returns (U_y, W_y) = (span of first components, span of second components) over in-arcs.
std::vector<SubspacePair> hom_line_to_subspace_pairs(const Graph& g, gf::Field field, std::size_t n,
                                                     const std::vector<VectorPair>& h);
// g: G -> S'(F,n). Returns h(x,y) = first (u,w) with u in U_x ∩ W_y^⊥, w in W_x ∩ U_y^⊥, <u,w> != 0.
std::vector<VectorPair> hom_subspace_pairs_to_line(const Graph& g, const std::vector<SubspacePair>& gmap);

// True when h maps every H-vertex to a non-self-orthogonal vector and H-edges to orthogonal pairs.
bool is_line_hom_to_O(const Graph& g, std::size_t n, const std::vector<gf::Vector>& h);
bool is_line_hom_to_Oprime(const Graph& g, std::size_t n, const std::vector<VectorPair>& h);

// The b(n) coordinate subspaces span{e_i : i in A}, |A| = floor(n/2), A in lexicographic order.
std::vector<gf::Subspace> canonical_clique_S(gf::Field field, std::size_t n);

// F^n contains no nonzero self-orthogonal vector.
bool isotropic_free(gf::Field field, std::size_t n);

// n-dimensional orthogonal representation of H built from a proper coloring of G
// and a clique of S(F,n) with at least palette members.
OrthRep od_rep_from_clique(const Graph& g, const Coloring& c, const std::vector<gf::Subspace>& clique);

}  // namespace odlab
