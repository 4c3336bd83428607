#include "odlab/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "odlab/clique.hpp"

namespace odlab {

const char* to_string(SearchStatus s) noexcept {
    switch (s) {
        case SearchStatus::found:
            return "found";
        case SearchStatus::none:
            return "none";
        case SearchStatus::unknown:
            return "unknown";
    }
    return "unknown";
}

std::uint32_t Coloring::used() const {
    std::vector<std::uint32_t> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::uint32_t>(std::unique(c.begin(), c.end()) - c.begin());
}

BigInt central_binomial(unsigned n) {
    BigInt r = 1;
    const unsigned k = n / 2;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

unsigned min_n_with_b_at_least(std::uint64_t chi) {
    unsigned n = 0;
    while (central_binomial(n) < chi) ++n;
    return n;
}

bool verify_coloring(const Graph& g, const Coloring& c) {
    if (c.colors.size() != g.num_vertices()) return false;
    for (auto col : c.colors)
        if (col >= c.palette) return false;
    for (const auto& [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

bool verify_homomorphism(const Graph& source, const Graph& target, const Homomorphism& h) {
    if (h.map.size() != source.num_vertices()) return false;
    for (auto t : h.map)
        if (t >= target.num_vertices()) return false;
    for (const auto& [u, v] : source.edges())
        if (!target.has_edge(h.map[u], h.map[v])) return false;
    return true;
}

// ---------------------------------------------------------------- DSATUR

namespace {

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, std::uint32_t k, Budget& budget)
        : g_(g), k_(k), budget_(budget), color_(g.num_vertices(), kNone),
          counts_(g.num_vertices() * k, 0), saturation_(g.num_vertices(), 0) {
        degree_.resize(g.num_vertices());
        neighbors_.resize(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            neighbors_[v] = g.neighbors(v);
            degree_[v] = neighbors_[v].size();
        }
    }

    // found / none / unknown
    SearchStatus run() {
        if (g_.num_vertices() == 0) return SearchStatus::found;
        if (k_ == 0) return SearchStatus::none;
        bool ok = search(0, 0);
        if (ok) return SearchStatus::found;
        return budget_.exhausted() ? SearchStatus::unknown : SearchStatus::none;
    }

    Coloring coloring() const {
        Coloring c;
        c.palette = k_;
        c.colors.assign(color_.begin(), color_.end());
        return c;
    }

private:
    static constexpr std::uint32_t kNone = ~std::uint32_t{0};

    Vertex select() const {
        Vertex best = g_.num_vertices();
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (color_[v] != kNone) continue;
            if (best == g_.num_vertices() || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && degree_[v] > degree_[best]))
                best = v;
        }
        return best;
    }

    void assign(Vertex v, std::uint32_t c) {
        color_[v] = c;
        for (Vertex u : neighbors_[v])
            if (counts_[u * k_ + c]++ == 0) ++saturation_[u];
    }

    void unassign(Vertex v) {
        const std::uint32_t c = color_[v];
        color_[v] = kNone;
        for (Vertex u : neighbors_[v])
            if (--counts_[u * k_ + c] == 0) --saturation_[u];
    }

    bool search(std::size_t colored, std::uint32_t used) {
        if (colored == g_.num_vertices()) return true;
        if (!budget_.step()) return false;
        const Vertex v = select();
        // Fresh colors are interchangeable: only the first unused one is tried.
        const std::uint32_t limit = std::min(k_, used + 1);
        for (std::uint32_t c = 0; c < limit; ++c) {
            if (counts_[v * k_ + c] != 0) continue;
            assign(v, c);
            if (search(colored + 1, std::max(used, c + 1))) return true;
            unassign(v);
            if (budget_.exhausted()) return false;
        }
        return false;
    }

    const Graph& g_;
    std::uint32_t k_;
    Budget& budget_;
    std::vector<std::uint32_t> color_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::size_t> saturation_;
    std::vector<std::size_t> degree_;
    std::vector<std::vector<Vertex>> neighbors_;
};

}  // namespace

ColorabilityResult k_colorable(const Graph& g, std::uint32_t k, const SearchLimits& limits) {
    Budget budget(limits);
    DsaturSearch s(g, k, budget);
    ColorabilityResult out;
    out.status = s.run();
    if (out.status == SearchStatus::found) out.coloring = s.coloring();
    out.nodes = budget.nodes();
    return out;
}

Coloring greedy_dsatur(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::uint32_t> color(n, ~std::uint32_t{0});
    std::vector<std::vector<bool>> seen(n);
    std::vector<std::size_t> sat(n, 0);
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::uint32_t palette = 0;
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] != ~std::uint32_t{0}) continue;
            if (best == n || sat[v] > sat[best] || (sat[v] == sat[best] && deg[v] > deg[best])) best = v;
        }
        std::uint32_t c = 0;
        while (c < seen[best].size() && seen[best][c]) ++c;
        color[best] = c;
        palette = std::max(palette, c + 1);
        for (Vertex u : g.neighbors(best)) {
            if (seen[u].size() <= c) seen[u].resize(c + 1, false);
            if (!seen[u][c]) {
                seen[u][c] = true;
                ++sat[u];
            }
        }
    }
    return Coloring{std::move(color), palette};
}

ChromaticResult chromatic_number(const Graph& g, const ChromaticOptions& opts) {
    if (g.num_vertices() > opts.max_vertices)
        throw GuardExceeded("chromatic solver guard: " + std::to_string(g.num_vertices()) + " vertices > " +
                            std::to_string(opts.max_vertices));
    ChromaticResult out;
    if (g.num_vertices() == 0) {
        out.status = SearchStatus::found;
        out.minimality = "trivial";
        return out;
    }

    CliqueOptions copts;
    copts.limits = opts.limits;
    const CliqueResult clique = max_clique(g, copts);
    out.nodes += clique.nodes;
    const auto lb = static_cast<std::uint32_t>(std::max<std::size_t>(1, clique.vertices.size()));
    out.lower_bound = lb;

    Coloring best = greedy_dsatur(g);
    out.k = best.palette;
    out.coloring = best;

    std::uint32_t k = lb;
    for (; k < best.palette; ++k) {
        ColorabilityResult r = k_colorable(g, k, opts.limits);
        out.nodes += r.nodes;
        if (r.status == SearchStatus::unknown) {
            out.status = SearchStatus::unknown;
            return out;
        }
        if (r.status == SearchStatus::found) {
            out.coloring = std::move(r.coloring);
            break;
        }
    }
    out.k = k;
    out.coloring.palette = k;
    out.status = SearchStatus::found;

    if (k <= 1) {
        out.minimality = "trivial";
    } else if (k > lb) {
        out.minimality = "exhausted";  // k-1 was refuted inside the loop
    } else {
        ColorabilityResult r = k_colorable(g, k - 1, opts.limits);
        out.nodes += r.nodes;
        if (r.status == SearchStatus::found) throw std::logic_error("clique bound contradicted by a coloring");
        out.minimality = r.status == SearchStatus::none ? "exhausted" : "clique";
    }
    return out;
}

// ---------------------------------------------------------------- homomorphisms

namespace {

class HomSearch {
public:
    HomSearch(const Graph& s, const Graph& t, Budget& budget) : s_(s), t_(t), budget_(budget) {
        const std::size_t n = s.num_vertices();
        map_.assign(n, kUnassigned);
        domains_.assign(n, Bitset(t.num_vertices(), true));
        neighbors_.resize(n);
        for (Vertex v = 0; v < n; ++v) neighbors_[v] = s.neighbors(v);
        sizes_.assign(n, t.num_vertices());
        // Vertices with neighbors need an image with at least one neighbor.
        Bitset non_isolated(t.num_vertices());
        for (Vertex x = 0; x < t.num_vertices(); ++x)
            if (t.neighbors_bits(x).any()) non_isolated.set(x);
        for (Vertex v = 0; v < n; ++v)
            if (!neighbors_[v].empty()) {
                domains_[v] &= non_isolated;
                sizes_[v] = domains_[v].count();
            }
    }

    void pin(Vertex v, Vertex target) {
        if (!domains_[v].test(target)) {
            domains_[v].clear();
            sizes_[v] = 0;
            return;
        }
        domains_[v].clear();
        domains_[v].set(target);
        sizes_[v] = 1;
    }

    SearchStatus run() {
        for (std::size_t sz : sizes_)
            if (sz == 0) return SearchStatus::none;
        if (search(0)) return SearchStatus::found;
        return budget_.exhausted() ? SearchStatus::unknown : SearchStatus::none;
    }

    std::vector<Vertex> map() const { return map_; }

private:
    static constexpr Vertex kUnassigned = ~Vertex{0};

    Vertex select() const {
        Vertex best = kUnassigned;
        for (Vertex v = 0; v < map_.size(); ++v) {
            if (map_[v] != kUnassigned) continue;
            if (best == kUnassigned || sizes_[v] < sizes_[best] ||
                (sizes_[v] == sizes_[best] && neighbors_[v].size() > neighbors_[best].size()))
                best = v;
        }
        return best;
    }

    bool search(std::size_t assigned) {
        if (assigned == map_.size()) return true;
        if (!budget_.step()) return false;
        const Vertex v = select();
        const Bitset candidates = domains_[v];
        for (std::size_t x = candidates.first(); x != Bitset::npos; x = candidates.next(x + 1)) {
            map_[v] = x;
            const std::size_t mark = trail_.size();
            bool ok = true;
            for (Vertex u : neighbors_[v]) {
                if (map_[u] != kUnassigned) continue;
                if (!domains_[u].intersects(t_.neighbors_bits(x))) {
                    ok = false;
                    break;
                }
                trail_.push_back({u, domains_[u], sizes_[u]});
                domains_[u] &= t_.neighbors_bits(x);
                sizes_[u] = domains_[u].count();
            }
            if (ok && search(assigned + 1)) return true;
            while (trail_.size() > mark) {
                auto& e = trail_.back();
                domains_[e.vertex] = std::move(e.domain);
                sizes_[e.vertex] = e.size;
                trail_.pop_back();
            }
            map_[v] = kUnassigned;
            if (budget_.exhausted()) return false;
        }
        return false;
    }

    struct TrailEntry {
        Vertex vertex;
        Bitset domain;
        std::size_t size;
    };

    const Graph& s_;
    const Graph& t_;
    Budget& budget_;
    std::vector<Vertex> map_;
    std::vector<Bitset> domains_;
    std::vector<std::size_t> sizes_;
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<TrailEntry> trail_;
};

// Lowest-index vertex of each connected component.
std::vector<Vertex> component_roots(const Graph& g) {
    std::vector<Vertex> roots;
    std::vector<bool> seen(g.num_vertices(), false);
    for (Vertex r = 0; r < g.num_vertices(); ++r) {
        if (seen[r]) continue;
        roots.push_back(r);
        std::vector<Vertex> stack{r};
        seen[r] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
    }
    return roots;
}

}  // namespace

HomResult find_homomorphism(const Graph& source, const Graph& target, const HomOptions& opts) {
    const std::uint64_t product = std::uint64_t{source.num_vertices()} * target.num_vertices();
    if (product > opts.max_product)
        throw GuardExceeded("homomorphism search guard: |V(G)|*|V(T)| = " + std::to_string(product));
    HomResult out;
    if (source.num_vertices() == 0) {
        out.status = SearchStatus::found;
        return out;
    }
    if (target.num_vertices() == 0) {
        out.status = SearchStatus::none;
        return out;
    }
    Budget budget(opts.limits);
    HomSearch search(source, target, budget);
    if (opts.vertex_transitive_target) {
        // Pin each component root to the lowest target vertex it may use.
        for (Vertex r : component_roots(source)) {
            Vertex pin_to = 0;
            if (source.degree(r) > 0) {
                while (pin_to < target.num_vertices() && target.degree(pin_to) == 0) ++pin_to;
                if (pin_to == target.num_vertices()) {
                    out.status = SearchStatus::none;
                    return out;
                }
            }
            search.pin(r, pin_to);
        }
    }
    out.status = search.run();
    if (out.status == SearchStatus::found) out.hom.map = search.map();
    out.nodes = budget.nodes();
    return out;
}

// ---------------------------------------------------------------- line-digraph colorings

Coloring lift_coloring_to_line(const Graph& g, const Coloring& c, unsigned n) {
    if (!verify_coloring(g, c)) throw InvalidArgument("lift_coloring_to_line: input coloring is not proper");
    if (BigInt(c.palette) > central_binomial(n))
        throw InvalidArgument("lift_coloring_to_line: palette " + std::to_string(c.palette) + " exceeds b(" +
                              std::to_string(n) + ")");
    // The first `palette` floor(n/2)-subsets of [n] in lexicographic order.
    const unsigned half = n / 2;
    std::vector<std::vector<bool>> sets;
    std::vector<unsigned> comb(half);
    std::iota(comb.begin(), comb.end(), 0U);
    while (sets.size() < c.palette) {
        std::vector<bool> member(n, false);
        for (unsigned e : comb) member[e] = true;
        sets.push_back(std::move(member));
        unsigned i = half;
        while (i > 0 && comb[i - 1] == n - half + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (unsigned j = i; j < half; ++j) comb[j] = comb[j - 1] + 1;
    }

    const LineDigraph line = line_digraph(g);
    Coloring out;
    out.palette = n;
    out.colors.reserve(line.arcs.size());
    for (const auto& a : line.arcs) {
        const auto& from = sets[c.colors[a.tail]];
        const auto& to = sets[c.colors[a.head]];
        unsigned color = n;
        for (unsigned e = 0; e < n; ++e)
            if (from[e] && !to[e]) {
                color = e;
                break;
            }
        if (color == n) throw std::logic_error("lift_coloring_to_line: equal subsets on an edge");
        out.colors.push_back(color);
    }
    return out;
}

Coloring set_coloring_from_line(const Graph& g, const Coloring& phi, unsigned n) {
    if (n > 31) throw InvalidArgument("set_coloring_from_line: n must be <= 31");
    const LineDigraph line = line_digraph(g);
    const Graph h = underlying_graph(line.digraph);
    if (!verify_coloring(h, phi) || phi.palette > n)
        throw InvalidArgument("set_coloring_from_line: input is not a proper n-coloring of H");
    Coloring out;
    out.palette = std::uint32_t{1} << n;
    out.colors.assign(g.num_vertices(), 0);
    for (std::size_t i = 0; i < line.arcs.size(); ++i) out.colors[line.arcs[i].head] |= std::uint32_t{1} << phi.colors[i];
    return out;
}

}  // namespace odlab
