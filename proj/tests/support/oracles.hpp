#pragma once
// Brute-force reference computations. Deliberately naive: no pruning, no
// shared code with the solvers beyond the graph and field types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "odlab/gf.hpp"
#include "odlab/graph.hpp"

namespace oracle {

using odlab::Graph;
using odlab::Vertex;

// Calls f on every word of [0,base)^len; stops when f returns true.
inline bool any_word(std::size_t len, std::uint32_t base, const std::function<bool(const std::vector<std::uint32_t>&)>& f) {
    std::vector<std::uint32_t> w(len, 0);
    while (true) {
        if (f(w)) return true;
        std::size_t i = 0;
        while (i < len && ++w[i] == base) w[i++] = 0;
        if (i == len) return false;
    }
}

inline bool proper(const Graph& g, const std::vector<std::uint32_t>& c) {
    for (const auto& [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

// Least k with a proper k-coloring, by trying every assignment.
inline std::uint32_t chromatic_number(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) return 0;
    for (std::uint32_t k = 1;; ++k)
        if (any_word(n, k, [&](const auto& c) { return proper(g, c); })) return k;
}

inline std::size_t clique_number(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        bool ok = true;
        for (std::size_t a = 0; a < vs.size() && ok; ++a)
            for (std::size_t b = a + 1; b < vs.size() && ok; ++b) ok = g.has_edge(vs[a], vs[b]);
        if (ok) best = std::max(best, vs.size());
    }
    return best;
}

inline std::uint32_t dot(std::uint32_t q, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::uint64_t{a[i]} * b[i];
    return static_cast<std::uint32_t>(s % q);
}

inline std::vector<std::vector<std::uint32_t>> words(std::uint32_t q, std::size_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    any_word(k, q, [&](const auto& w) {
        out.push_back(w);
        return false;
    });
    return out;
}

// od_q(G) <= k: every assignment of non-self-orthogonal vectors (first nonzero
// coordinate 1) is tried.
inline bool has_orth_rep(const Graph& g, std::uint32_t q, std::size_t k) {
    std::vector<std::vector<std::uint32_t>> cand;
    for (auto& w : words(q, k)) {
        auto it = std::find_if(w.begin(), w.end(), [](auto x) { return x != 0; });
        if (it == w.end() || *it != 1) continue;
        if (dot(q, w, w) != 0) cand.push_back(w);
    }
    if (cand.empty()) return g.num_vertices() == 0;
    const auto n = g.num_vertices();
    return any_word(n, static_cast<std::uint32_t>(cand.size()), [&](const auto& a) {
        for (const auto& [u, v] : g.edges())
            if (dot(q, cand[a[u]], cand[a[v]]) != 0) return false;
        return true;
    });
}

inline std::size_t orthogonality_dimension(const Graph& g, std::uint32_t q) {
    for (std::size_t k = 1;; ++k)
        if (has_orth_rep(g, q, k)) return k;
}

inline std::size_t rank(std::uint32_t q, std::vector<std::vector<std::uint32_t>> m) {
    const odlab::gf::Field f(q);
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const auto inv = f.inv(m[r][c]);
        for (auto& x : m[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c] != 0) {
                const auto factor = m[i][c];
                for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
            }
        ++r;
    }
    return r;
}

// Least rank of a matrix with unit diagonal (row scaling makes this general)
// and zeros on non-adjacent pairs, over every choice of the free entries.
inline std::size_t minrank(const Graph& g, std::uint32_t q) {
    const std::size_t n = g.num_vertices();
    std::vector<std::pair<Vertex, Vertex>> free;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) free.emplace_back(i, j);
    std::size_t best = n;
    any_word(free.size(), q, [&](const auto& a) {
        std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n, 0));
        for (Vertex i = 0; i < n; ++i) m[i][i] = 1;
        for (std::size_t t = 0; t < free.size(); ++t) m[free[t].first][free[t].second] = a[t];
        best = std::min(best, rank(q, m));
        return best <= 1;
    });
    return best;
}

// Number of distinct subspaces of F_q^n, counted by collecting the spans of all
// tuples of up to n vectors as sorted element lists.
inline std::size_t subspace_count_by_spans(std::uint32_t q, std::size_t n) {
    const auto all = words(q, n);
    std::vector<std::vector<std::vector<std::uint32_t>>> seen;
    std::function<void(std::vector<std::vector<std::uint32_t>>, std::size_t, std::size_t)> rec;
    auto span_of = [&](const std::vector<std::vector<std::uint32_t>>& gens) {
        std::vector<std::vector<std::uint32_t>> out;
        any_word(gens.size(), q, [&](const auto& coef) {
            std::vector<std::uint32_t> v(n, 0);
            for (std::size_t g = 0; g < gens.size(); ++g)
                for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + coef[g] * gens[g][i]) % q;
            out.push_back(v);
            return false;
        });
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    rec = [&](std::vector<std::vector<std::uint32_t>> gens, std::size_t from, std::size_t left) {
        seen.push_back(span_of(gens));
        if (left == 0) return;
        for (std::size_t i = from; i < all.size(); ++i) {
            gens.push_back(all[i]);
            rec(gens, i + 1, left - 1);
            gens.pop_back();
        }
    };
    rec({}, 0, n);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return seen.size();
}

// Messages x, y that some receiver cannot tell apart from side information
// while needing different symbols.
inline bool confusable(const Graph& g, const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
    for (Vertex i = 0; i < g.num_vertices(); ++i) {
        if (x[i] == y[i]) continue;
        bool same = true;
        for (auto j : g.neighbors(i)) same = same && x[j] == y[j];
        if (same) return true;
    }
    return false;
}

// Optimal index code length: least k such that the confusion graph on s^n
// messages has a proper s^k-coloring.
inline std::size_t optimal_index_code_length(const Graph& g, std::uint32_t s) {
    const auto msgs = words(s, g.num_vertices());
    Graph conf(msgs.size());
    for (std::size_t a = 0; a < msgs.size(); ++a)
        for (std::size_t b = a + 1; b < msgs.size(); ++b)
            if (confusable(g, msgs[a], msgs[b])) conf.add_edge(a, b);
    const auto chi = oracle::chromatic_number(conf);
    std::size_t k = 0;
    std::uint64_t cap = 1;
    while (cap < chi) {
        cap *= s;
        ++k;
    }
    return k;
}

}  // namespace oracle
