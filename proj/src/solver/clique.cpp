#include "odlab/clique.hpp"

#include <algorithm>

namespace odlab {

namespace {

class MaxCliqueSearch {
public:
    MaxCliqueSearch(const Graph& g, Budget& budget) : g_(g), budget_(budget) {}

    void run() {
        Bitset all(g_.num_vertices(), true);
        std::vector<Vertex> current;
        expand(current, all);
    }

    std::vector<Vertex> best;

private:
    // Greedy color classes over `p`: vertices in emission order with the class
    // index (1-based) used as an upper bound on any clique they extend.
    void color_sort(const Bitset& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
        Bitset remaining = p;
        std::size_t color = 0;
        while (remaining.any()) {
            ++color;
            Bitset candidates = remaining;
            for (std::size_t v = candidates.first(); v != Bitset::npos; v = candidates.next(v + 1)) {
                candidates.and_not(g_.neighbors_bits(v));
                remaining.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    void expand(std::vector<Vertex>& current, Bitset p) {
        if (!budget_.step()) return;
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        color_sort(p, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (budget_.exhausted()) return;
            if (current.size() + bound[i] <= best.size()) return;
            const Vertex v = order[i];
            current.push_back(v);
            Bitset next(p.size());
            next.assign_and(p, g_.neighbors_bits(v));
            if (next.none()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(current, std::move(next));
            }
            current.pop_back();
            p.reset(v);
        }
    }

    const Graph& g_;
    Budget& budget_;
};

}  // namespace

CliqueResult max_clique(const Graph& g, const CliqueOptions& opts) {
    if (g.num_vertices() > opts.max_vertices)
        throw GuardExceeded("clique solver guard: " + std::to_string(g.num_vertices()) + " vertices > " +
                            std::to_string(opts.max_vertices));
    CliqueResult out;
    if (g.num_vertices() == 0) {
        out.status = SearchStatus::found;
        return out;
    }
    Budget budget(opts.limits);
    MaxCliqueSearch search(g, budget);
    search.run();
    out.vertices = std::move(search.best);
    std::sort(out.vertices.begin(), out.vertices.end());
    out.status = budget.exhausted() ? SearchStatus::unknown : SearchStatus::found;
    out.nodes = budget.nodes();
    return out;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.num_vertices()) return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[j] >= g.num_vertices() || !g.has_edge(vertices[i], vertices[j])) return false;
    }
    return true;
}

namespace {

struct BronKerbosch {
    const Graph& g;
    const std::function<bool(const std::vector<Vertex>&)>& visit;
    std::uint64_t count = 0;
    bool stop = false;

    void run(std::vector<Vertex>& r, Bitset p, Bitset x) {
        if (stop) return;
        if (p.none() && x.none()) {
            ++count;
            std::vector<Vertex> sorted = r;
            std::sort(sorted.begin(), sorted.end());
            if (!visit(sorted)) stop = true;
            return;
        }
        // Pivot maximizing |P ∩ N(u)| over P ∪ X.
        std::size_t pivot = Bitset::npos;
        std::size_t best = 0;
        for (const Bitset* s : {&p, &x})
            for (std::size_t u = s->first(); u != Bitset::npos; u = s->next(u + 1)) {
                std::size_t c = p.and_count(g.neighbors_bits(u));
                if (pivot == Bitset::npos || c > best) {
                    pivot = u;
                    best = c;
                }
            }
        Bitset candidates = p;
        candidates.and_not(g.neighbors_bits(pivot));
        for (std::size_t v = candidates.first(); v != Bitset::npos && !stop; v = candidates.next(v + 1)) {
            r.push_back(v);
            Bitset np(p.size());
            np.assign_and(p, g.neighbors_bits(v));
            Bitset nx(x.size());
            nx.assign_and(x, g.neighbors_bits(v));
            run(r, std::move(np), std::move(nx));
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    }
};

}  // namespace

std::uint64_t for_each_maximal_clique(const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& visit) {
    if (g.num_vertices() == 0) {
        visit({});
        return 1;
    }
    BronKerbosch bk{g, visit};
    std::vector<Vertex> r;
    bk.run(r, Bitset(g.num_vertices(), true), Bitset(g.num_vertices()));
    return bk.count;
}

}  // namespace odlab
