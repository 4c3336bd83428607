#include "odlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "odlab/errors.hpp"

namespace odlab {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i + 1);
    return out;
}

}  // namespace

Graph::Graph(std::size_t n) : Graph(default_labels(n)) {}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    adj_.assign(labels_.size(), Bitset(labels_.size()));
}

bool Graph::add_edge(Vertex u, Vertex v) {
    if (u >= num_vertices() || v >= num_vertices()) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("loop at vertex " + labels_[u]);
    if (adj_[u].test(v)) return false;
    adj_[u].set(v);
    adj_[v].set(u);
    ++num_edges_;
    return true;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (std::size_t v = adj_[u].next(u + 1); v != Bitset::npos; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
    return out;
}

bool Graph::has_default_labels() const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] != std::to_string(i + 1)) return false;
    return true;
}

Digraph::Digraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    out_.assign(labels_.size(), Bitset(labels_.size()));
}

bool Digraph::add_arc(Vertex tail, Vertex head) {
    if (tail >= num_vertices() || head >= num_vertices()) throw InvalidArgument("arc endpoint out of range");
    if (tail == head) throw InvalidArgument("loop at vertex " + labels_[tail]);
    if (out_[tail].test(head)) return false;
    out_[tail].set(head);
    ++num_arcs_;
    return true;
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(num_arcs_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : out_[u].to_indices()) out.emplace_back(u, v);
    return out;
}

Vertex LineDigraph::index_of(Vertex tail, Vertex head) const {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), ArcVertex{tail, head});
    if (it == arcs.end() || it->tail != tail || it->head != head) throw InvalidArgument("not a vertex of the line digraph");
    return static_cast<Vertex>(it - arcs.begin());
}

LineDigraph line_digraph(const Graph& g) {
    LineDigraph out;
    for (Vertex x = 0; x < g.num_vertices(); ++x)
        for (Vertex y : g.neighbors(x)) out.arcs.push_back({x, y});
    // neighbors() is ascending, so arcs are already sorted by (tail, head)
    std::vector<std::string> labels;
    labels.reserve(out.arcs.size());
    for (const auto& a : out.arcs) labels.push_back(g.label(a.tail) + ">" + g.label(a.head));
    out.digraph = Digraph(std::move(labels));

    // first_out[y] = index of the first line-digraph vertex with tail y
    std::vector<std::size_t> first_out(g.num_vertices() + 1, 0);
    for (const auto& a : out.arcs) ++first_out[a.tail + 1];
    for (std::size_t i = 1; i < first_out.size(); ++i) first_out[i] += first_out[i - 1];

    for (std::size_t i = 0; i < out.arcs.size(); ++i) {
        const Vertex y = out.arcs[i].head;
        for (std::size_t j = first_out[y]; j < first_out[y + 1]; ++j) out.digraph.add_arc(i, j);
    }
    return out;
}

Graph underlying_graph(const Digraph& d) {
    Graph g(d.labels());
    for (const auto& [u, v] : d.arcs()) g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    Graph out(g.labels());
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Vertex v = u + 1; v < g.num_vertices(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Graph line_graph_h(const Graph& g) { return underlying_graph(line_digraph(g).digraph); }

Graph permute(const Graph& g, const std::vector<Vertex>& perm) {
    if (perm.size() != g.num_vertices()) throw InvalidArgument("permutation size mismatch");
    std::vector<Vertex> inverse(perm.size(), perm.size());
    std::vector<std::string> labels(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size() || inverse[perm[i]] != perm.size()) throw InvalidArgument("not a permutation");
        inverse[perm[i]] = i;
        labels[i] = g.label(perm[i]);
    }
    Graph out(std::move(labels));
    for (const auto& [u, v] : g.edges()) out.add_edge(inverse[u], inverse[v]);
    return out;
}

// ---------------------------------------------------------------- DIMACS

namespace {

struct Tokenizer {
    std::string_view line;
    std::size_t pos = 0;

    std::string_view next() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        return line.substr(start, pos - start);
    }
    std::string_view rest() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        return line.substr(pos);
    }
};

std::size_t parse_count(std::string_view tok, std::size_t line_no, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw InvalidArgument("line " + std::to_string(line_no) + ": bad " + what + " '" + std::string(tok) + "'");
    return value;
}

struct ScanResult {
    std::vector<std::string> labels;
    std::vector<std::string> warnings;
};

template <typename OnHeader, typename OnEdge>
ScanResult scan_dimacs(std::string_view text, std::string_view kind, char edge_tag, OnHeader on_header,
                                     OnEdge on_edge) {
    std::vector<std::string> warnings;
    std::map<std::size_t, std::string> labels;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t declared_m = 0;
    std::size_t seen_m = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        Tokenizer tk{line};
        std::string_view tag = tk.next();
        if (tag.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        if (tag == "c") {
            if (tk.next() == "label") {
                std::size_t idx = parse_count(tk.next(), line_no, "label index");
                labels[idx] = std::string(tk.rest());
            }
            continue;
        }
        if (tag == "p") {
            if (have_header) throw InvalidArgument("line " + std::to_string(line_no) + ": duplicate header");
            if (tk.next() != kind)
                throw InvalidArgument("line " + std::to_string(line_no) + ": expected 'p " + std::string(kind) + " n m'");
            n = parse_count(tk.next(), line_no, "vertex count");
            declared_m = parse_count(tk.next(), line_no, "edge count");
            if (!tk.next().empty()) throw InvalidArgument("line " + std::to_string(line_no) + ": trailing tokens in header");
            have_header = true;
            on_header(n);
            continue;
        }
        if (tag.size() == 1 && tag[0] == edge_tag) {
            if (!have_header) throw InvalidArgument("line " + std::to_string(line_no) + ": edge before header");
            std::size_t u = parse_count(tk.next(), line_no, "vertex");
            std::size_t v = parse_count(tk.next(), line_no, "vertex");
            if (!tk.next().empty()) throw InvalidArgument("line " + std::to_string(line_no) + ": trailing tokens");
            if (u < 1 || u > n || v < 1 || v > n)
                throw InvalidArgument("line " + std::to_string(line_no) + ": vertex index out of range");
            if (u == v) throw InvalidArgument("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
            ++seen_m;
            if (!on_edge(u - 1, v - 1))
                warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(u) + " " +
                                   std::to_string(v) + " ignored");
            continue;
        }
        throw InvalidArgument("line " + std::to_string(line_no) + ": unrecognized line '" + std::string(line) + "'");
    }
    if (!have_header) throw InvalidArgument("missing 'p " + std::string(kind) + "' header");
    if (seen_m != declared_m)
        warnings.push_back("header declares " + std::to_string(declared_m) + " edges, found " + std::to_string(seen_m));
    for (const auto& [idx, lab] : labels)
        if (idx < 1 || idx > n) throw InvalidArgument("label index " + std::to_string(idx) + " out of range");
    ScanResult out{default_labels(n), std::move(warnings)};
    for (const auto& [idx, lab] : labels) out.labels[idx - 1] = lab;
    return out;
}

}  // namespace

ParsedGraph parse_dimacs(std::string_view text) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Bitset> seen;
    auto scan = scan_dimacs(
        text, "edge", 'e', [&](std::size_t n) { seen.assign(n, Bitset(n)); },
        [&](std::size_t u, std::size_t v) {
            if (seen[u].test(v)) return false;
            seen[u].set(v);
            seen[v].set(u);
            edges.emplace_back(u, v);
            return true;
        });
    ParsedGraph out{Graph(std::move(scan.labels)), std::move(scan.warnings)};
    for (const auto& [u, v] : edges) out.graph.add_edge(u, v);
    return out;
}

ParsedDigraph parse_dimacs_digraph(std::string_view text) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::vector<Bitset> seen;
    auto scan = scan_dimacs(
        text, "arc", 'a', [&](std::size_t n) { seen.assign(n, Bitset(n)); },
        [&](std::size_t u, std::size_t v) {
            if (seen[u].test(v)) return false;
            seen[u].set(v);
            arcs.emplace_back(u, v);
            return true;
        });
    ParsedDigraph out{Digraph(std::move(scan.labels)), std::move(scan.warnings)};
    for (const auto& [u, v] : arcs) out.digraph.add_arc(u, v);
    return out;
}

namespace {

void write_labels(std::ostringstream& os, const std::vector<std::string>& labels) {
    bool defaults = true;
    for (std::size_t i = 0; i < labels.size() && defaults; ++i) defaults = labels[i] == std::to_string(i + 1);
    if (defaults) return;
    for (std::size_t i = 0; i < labels.size(); ++i) os << "c label " << (i + 1) << ' ' << labels[i] << '\n';
}

}  // namespace

std::string serialize_dimacs(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    write_labels(os, g.labels());
    for (const auto& [u, v] : g.edges()) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    return os.str();
}

std::string serialize_dimacs(const Digraph& d) {
    std::ostringstream os;
    os << "p arc " << d.num_vertices() << ' ' << d.num_arcs() << '\n';
    write_labels(os, d.labels());
    for (const auto& [u, v] : d.arcs()) os << "a " << (u + 1) << ' ' << (v + 1) << '\n';
    return os.str();
}

ParsedGraph read_dimacs_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_dimacs(ss.str());
}

}  // namespace odlab
