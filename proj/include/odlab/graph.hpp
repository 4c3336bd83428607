#pragma once
// Simple graphs and digraphs with stable vertex labels, the line digraph,
// and DIMACS I/O.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odlab/bitset.hpp"

namespace odlab {

using Vertex = std::size_t;

// Undirected simple graph. Vertices are 0..n-1 in canonical order; each carries a label.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);                       // labels "1".."n"
    explicit Graph(std::vector<std::string> labels);

    std::size_t num_vertices() const noexcept { return labels_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }

    // Throws InvalidArgument for loops or out-of-range endpoints. Returns false if already present.
    bool add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const noexcept { return adj_[u].test(v); }

    const Bitset& neighbors_bits(Vertex v) const noexcept { return adj_[v]; }
    std::vector<Vertex> neighbors(Vertex v) const { return adj_[v].to_indices(); }
    std::size_t degree(Vertex v) const noexcept { return adj_[v].count(); }

    // Edges (u, v) with u < v, lexicographic.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    const std::string& label(Vertex v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    // True when labels are exactly "1".."n".
    bool has_default_labels() const;

    // Same edge set and labels.
    friend bool operator==(const Graph& a, const Graph& b) { return a.labels_ == b.labels_ && a.adj_ == b.adj_; }

private:
    std::vector<std::string> labels_;
    std::vector<Bitset> adj_;
    std::size_t num_edges_ = 0;
};

// Directed simple graph without loops.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::vector<std::string> labels);

    std::size_t num_vertices() const noexcept { return labels_.size(); }
    std::size_t num_arcs() const noexcept { return num_arcs_; }

    bool add_arc(Vertex tail, Vertex head);
    bool has_arc(Vertex tail, Vertex head) const noexcept { return out_[tail].test(head); }
    std::vector<Vertex> out_neighbors(Vertex v) const { return out_[v].to_indices(); }
    std::vector<std::pair<Vertex, Vertex>> arcs() const;

    const std::string& label(Vertex v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    std::vector<std::string> labels_;
    std::vector<Bitset> out_;
    std::size_t num_arcs_ = 0;
};

// A vertex of the line digraph: an ordered pair of adjacent vertices of G.
struct ArcVertex {
    Vertex tail;
    Vertex head;
    friend auto operator<=>(const ArcVertex&, const ArcVertex&) = default;
};

struct LineDigraph {
    Digraph digraph;
    std::vector<ArcVertex> arcs;  // arcs[i] is the G-arc behind vertex i of `digraph`

    // Index of the vertex (tail, head), or throws InvalidArgument.
    Vertex index_of(Vertex tail, Vertex head) const;
};

// Vertices: both orientations of every edge, ordered by (tail, head); labels "tail>head".
// Arc (x,y) -> (z,w) whenever y == z, including (x,y) -> (y,x).
LineDigraph line_digraph(const Graph& g);

Graph underlying_graph(const Digraph& d);
Graph complement(const Graph& g);

// Shorthand for underlying_graph(line_digraph(g).digraph).
Graph line_graph_h(const Graph& g);

// Relabel/reorder: result vertex i is g's vertex perm[i].
Graph permute(const Graph& g, const std::vector<Vertex>& perm);

// ---------------------------------------------------------------- DIMACS

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

struct ParsedDigraph {
    Digraph digraph;
    std::vector<std::string> warnings;
};

// "p edge n m" + "e u v" (1-indexed). Comment lines "c label <i> <text>" restore
// vertex labels; other "c" lines are ignored. Duplicate edges are dropped with a
// warning; loops and malformed lines throw InvalidArgument.
ParsedGraph parse_dimacs(std::string_view text);
ParsedDigraph parse_dimacs_digraph(std::string_view text);

// Canonical form: header, label comments when labels are not "1".."n", edges sorted.
std::string serialize_dimacs(const Graph& g);
std::string serialize_dimacs(const Digraph& d);

ParsedGraph read_dimacs_file(const std::string& path);

}  // namespace odlab
