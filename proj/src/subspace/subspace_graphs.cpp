#include "odlab/subspace_graphs.hpp"

#include <algorithm>
#include <numeric>

namespace odlab {

namespace {

bool has_nonisotropic(const gf::Subspace& s) { return gf::find_nonisotropic(s).has_value(); }

// Exists u in a, w in b with <u,w> != 0, by enumerating both subspaces.
bool has_nonorthogonal_pair(const gf::Subspace& a, const gf::Subspace& b) {
    const auto as = a.elements();
    const auto bs = b.elements();
    for (const auto& u : as)
        for (const auto& w : bs)
            if (gf::inner_product(u, w) != 0) return true;
    return false;
}

std::optional<VectorPair> first_nonorthogonal_pair(const gf::Subspace& a, const gf::Subspace& b) {
    const auto as = a.elements();
    const auto bs = b.elements();
    for (const auto& u : as)
        for (const auto& w : bs)
            if (gf::inner_product(u, w) != 0) return VectorPair{u, w};
    return std::nullopt;
}

gf::Subspace meet_perp(const gf::Subspace& a, const gf::Subspace& b) {
    return gf::intersect(a, gf::orthogonal_complement(b));
}

std::size_t index_of(const std::vector<gf::Subspace>& sorted, const gf::Subspace& s) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
    if (it == sorted.end() || !(*it == s)) throw std::logic_error("subspace missing from enumeration");
    return static_cast<std::size_t>(it - sorted.begin());
}

// meet[i*m + j] = index of S_i ∩ S_j^⊥.
std::vector<std::size_t> meet_table(const std::vector<gf::Subspace>& subs) {
    const std::size_t m = subs.size();
    std::vector<std::size_t> meet(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) meet[i * m + j] = index_of(subs, meet_perp(subs[i], subs[j]));
    return meet;
}

}  // namespace

bool s_adjacent(const gf::Subspace& u1, const gf::Subspace& u2) {
    if (u1 == u2) return false;
    return has_nonisotropic(meet_perp(u1, u2)) && has_nonisotropic(meet_perp(u2, u1));
}

bool sprime_adjacent(const SubspacePair& a, const SubspacePair& b) {
    if (a == b) return false;
    const auto& [u1, w1] = a;
    const auto& [u2, w2] = b;
    return has_nonorthogonal_pair(meet_perp(u1, w2), meet_perp(w1, u2)) &&
           has_nonorthogonal_pair(meet_perp(u2, w1), meet_perp(w2, u1));
}

SubspaceGraph build_S(gf::Field field, std::size_t n, gf::EnumerationGuard guard) {
    auto subs = gf::enumerate_subspaces(field, n, guard);
    const std::size_t m = subs.size();
    const auto meet = meet_table(subs);
    std::vector<bool> noniso(m);
    for (std::size_t i = 0; i < m; ++i) noniso[i] = has_nonisotropic(subs[i]);

    std::vector<std::string> labels;
    for (const auto& s : subs) labels.push_back(s.to_string());
    SubspaceGraph out{field, n, Graph(std::move(labels)), std::move(subs)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (noniso[meet[i * m + j]] && noniso[meet[j * m + i]]) out.graph.add_edge(i, j);
    return out;
}

SubspacePairGraph build_Sprime(gf::Field field, std::size_t n, gf::EnumerationGuard guard) {
    auto subs = gf::enumerate_subspaces(field, n, guard);
    const std::size_t m = subs.size();
    const auto meet = meet_table(subs);
    std::vector<bool> nonorth(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) nonorth[i * m + j] = has_nonorthogonal_pair(subs[i], subs[j]);

    std::vector<std::string> labels;
    std::vector<SubspacePair> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            labels.push_back(subs[i].to_string() + "|" + subs[j].to_string());
            pairs.emplace_back(subs[i], subs[j]);
        }
    SubspacePairGraph out{field, n, Graph(std::move(labels)), std::move(pairs)};
    const std::size_t v = m * m;
    for (std::size_t a = 0; a < v; ++a) {
        const std::size_t u1 = a / m, w1 = a % m;
        for (std::size_t b = a + 1; b < v; ++b) {
            const std::size_t u2 = b / m, w2 = b % m;
            if (nonorth[meet[u1 * m + w2] * m + meet[w1 * m + u2]] && nonorth[meet[u2 * m + w1] * m + meet[w2 * m + u1]])
                out.graph.add_edge(a, b);
        }
    }
    return out;
}

bool is_line_hom_to_O(const Graph& g, std::size_t n, const std::vector<gf::Vector>& h) {
    const Graph hg = line_graph_h(g);
    if (h.size() != hg.num_vertices()) return false;
    for (const auto& v : h)
        if (v.size() != n || gf::inner_product(v, v) == 0) return false;
    for (const auto& [a, b] : hg.edges())
        if (h[a] == h[b] || gf::inner_product(h[a], h[b]) != 0) return false;
    return true;
}

bool is_line_hom_to_Oprime(const Graph& g, std::size_t n, const std::vector<VectorPair>& h) {
    const Graph hg = line_graph_h(g);
    if (h.size() != hg.num_vertices()) return false;
    for (const auto& [u, w] : h)
        if (u.size() != n || w.size() != n || gf::inner_product(u, w) == 0) return false;
    for (const auto& [a, b] : hg.edges()) {
        if (h[a] == h[b]) return false;
        if (gf::inner_product(h[a].first, h[b].second) != 0 || gf::inner_product(h[b].first, h[a].second) != 0)
            return false;
    }
    return true;
}

std::vector<gf::Subspace> hom_line_to_subspaces(const Graph& g, gf::Field field, std::size_t n,
                                                const std::vector<gf::Vector>& h) {
    if (!is_line_hom_to_O(g, n, h)) throw InvalidWitness("input is not a homomorphism from H to O(F,n)");
    const LineDigraph line = line_digraph(g);
    std::vector<std::vector<gf::Vector>> gens(g.num_vertices());
    for (std::size_t i = 0; i < line.arcs.size(); ++i) gens[line.arcs[i].head].push_back(h[i]);
    std::vector<gf::Subspace> out;
    out.reserve(g.num_vertices());
    for (const auto& gv : gens) out.push_back(gf::Subspace::span(field, n, gv));
    for (const auto& [x, y] : g.edges())
        if (!s_adjacent(out[x], out[y])) throw InvalidWitness("translated map is not a homomorphism into S(F,n)");
    return out;
}

std::vector<gf::Vector> hom_subspaces_to_line(const Graph& g, const std::vector<gf::Subspace>& gmap) {
    if (gmap.size() != g.num_vertices()) throw InvalidWitness("map does not cover every vertex of G");
    for (const auto& [x, y] : g.edges())
        if (!s_adjacent(gmap[x], gmap[y])) throw InvalidWitness("input is not a homomorphism from G to S(F,n)");
    const LineDigraph line = line_digraph(g);
    std::vector<gf::Vector> h;
    h.reserve(line.arcs.size());
    for (const auto& a : line.arcs) {
        auto w = gf::find_nonisotropic(meet_perp(gmap[a.tail], gmap[a.head]));
        if (!w) throw InvalidWitness("no non-self-orthogonal vector in g(x) ∩ g(y)^⊥");
        h.push_back(std::move(*w));
    }
    const std::size_t n = gmap.empty() ? 0 : gmap.front().ambient_dim();
    if (!h.empty() && !is_line_hom_to_O(g, n, h)) throw InvalidWitness("translated map is not a homomorphism into O(F,n)");
    return h;
}

std::vector<SubspacePair> hom_line_to_subspace_pairs(const Graph& g, gf::Field field, std::size_t n,
                                                     const std::vector<VectorPair>& h) {
    if (!is_line_hom_to_Oprime(g, n, h)) throw InvalidWitness("input is not a homomorphism from H to O'(F,n)");
    const LineDigraph line = line_digraph(g);
    std::vector<std::vector<gf::Vector>> us(g.num_vertices());
    std::vector<std::vector<gf::Vector>> ws(g.num_vertices());
    for (std::size_t i = 0; i < line.arcs.size(); ++i) {
        us[line.arcs[i].head].push_back(h[i].first);
        ws[line.arcs[i].head].push_back(h[i].second);
    }
    std::vector<SubspacePair> out;
    out.reserve(g.num_vertices());
    for (Vertex y = 0; y < g.num_vertices(); ++y)
        out.emplace_back(gf::Subspace::span(field, n, us[y]), gf::Subspace::span(field, n, ws[y]));
    for (const auto& [x, y] : g.edges())
        if (!sprime_adjacent(out[x], out[y])) throw InvalidWitness("translated map is not a homomorphism into S'(F,n)");
    return out;
}

std::vector<VectorPair> hom_subspace_pairs_to_line(const Graph& g, const std::vector<SubspacePair>& gmap) {
    if (gmap.size() != g.num_vertices()) throw InvalidWitness("map does not cover every vertex of G");
    for (const auto& [x, y] : g.edges())
        if (!sprime_adjacent(gmap[x], gmap[y])) throw InvalidWitness("input is not a homomorphism from G to S'(F,n)");
    const LineDigraph line = line_digraph(g);
    std::vector<VectorPair> h;
    h.reserve(line.arcs.size());
    for (const auto& a : line.arcs) {
        const auto& [ux, wx] = gmap[a.tail];
        const auto& [uy, wy] = gmap[a.head];
        auto p = first_nonorthogonal_pair(meet_perp(ux, wy), meet_perp(wx, uy));
        if (!p) throw InvalidWitness("no non-orthogonal pair in U_x ∩ W_y^⊥ and W_x ∩ U_y^⊥");
        h.push_back(std::move(*p));
    }
    const std::size_t n = gmap.empty() ? 0 : gmap.front().first.ambient_dim();
    if (!h.empty() && !is_line_hom_to_Oprime(g, n, h))
        throw InvalidWitness("translated map is not a homomorphism into O'(F,n)");
    return h;
}

std::vector<gf::Subspace> canonical_clique_S(gf::Field field, std::size_t n) {
    const std::size_t half = n / 2;
    std::vector<gf::Subspace> out;
    std::vector<std::size_t> comb(half);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    while (true) {
        std::vector<gf::Vector> gens;
        for (auto i : comb) gens.push_back(gf::Vector::unit(field, n, i));
        out.push_back(gf::Subspace::span(field, n, gens));
        std::size_t i = half;
        while (i > 0 && comb[i - 1] == n - half + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < half; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

bool isotropic_free(gf::Field field, std::size_t n) {
    for (const auto& v : gf::all_vectors(field, n))
        if (!v.is_zero() && gf::inner_product(v, v) == 0) return false;
    return true;
}

OrthRep od_rep_from_clique(const Graph& g, const Coloring& c, const std::vector<gf::Subspace>& clique) {
    if (!verify_coloring(g, c)) throw InvalidArgument("od_rep_from_clique: coloring is not proper");
    if (c.palette > clique.size()) throw InvalidArgument("od_rep_from_clique: clique smaller than the palette");
    if (clique.empty()) return OrthRep{gf::Field(2), 0, {}};
    std::vector<gf::Subspace> gmap;
    gmap.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) gmap.push_back(clique[c.colors[v]]);
    auto h = hom_subspaces_to_line(g, gmap);
    return OrthRep{clique.front().field(), clique.front().ambient_dim(), std::move(h)};
}

}  // namespace odlab
