#include "odlab/algebraic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "odlab/clique.hpp"

namespace odlab {

const char* to_string(ParamStatus s) noexcept {
    switch (s) {
        case ParamStatus::exact:
            return "exact";
        case ParamStatus::exceeds:
            return "exceeds";
        case ParamStatus::unknown:
            return "unknown";
    }
    return "unknown";
}

namespace {

void check_guard(std::uint64_t count, const TargetGuard& guard, const char* what) {
    if (count > guard.max_vertices)
        throw GuardExceeded(std::string(what) + ": target would exceed " + std::to_string(guard.max_vertices) +
                            " candidate vertices");
}

// Inner products between all vectors of F^k, indexed by lexicographic rank.
std::vector<gf::Elem> inner_product_table(const std::vector<gf::Vector>& vs) {
    const std::size_t n = vs.size();
    std::vector<gf::Elem> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) table[a * n + b] = table[b * n + a] = gf::inner_product(vs[a], vs[b]);
    return table;
}

VectorGraph vector_graph(gf::Field field, std::size_t k, bool projective, const TargetGuard& guard) {
    const std::uint64_t space = gf::checked_pow(field.order(), k, guard.max_vertices);
    check_guard(space, guard, "O(F,k)");
    std::vector<gf::Vector> all = projective ? gf::projective_points(field, k) : gf::all_vectors(field, k);
    std::vector<gf::Vector> keep;
    for (auto& v : all)
        if (!v.is_zero() && gf::inner_product(v, v) != 0) keep.push_back(std::move(v));
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (const auto& v : keep) labels.push_back(v.to_string());
    VectorGraph out{Graph(std::move(labels)), std::move(keep)};
    const auto table = inner_product_table(out.vectors);
    const std::size_t n = out.vectors.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (table[a * n + b] == 0) out.graph.add_edge(a, b);
    return out;
}

PairGraph pair_graph(gf::Field field, std::size_t k, bool projective, const TargetGuard& guard) {
    const std::uint64_t space = gf::checked_pow(field.order(), 2 * k, guard.max_vertices);
    check_guard(space / (projective ? (field.order() - 1) : 1), guard, "O'(F,k)");
    const std::vector<gf::Vector> all = gf::all_vectors(field, k);
    const auto table = inner_product_table(all);
    const std::size_t m = all.size();

    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t a = 0; a < m; ++a) {
        if (projective && (all[a].is_zero() || !(all[a].normalized() == all[a]))) continue;
        for (std::size_t b = 0; b < m; ++b)
            if (table[a * m + b] != 0) idx.emplace_back(a, b);
    }
    std::vector<std::string> labels;
    std::vector<VectorPair> pairs;
    labels.reserve(idx.size());
    pairs.reserve(idx.size());
    for (const auto& [a, b] : idx) {
        labels.push_back(all[a].to_string() + "|" + all[b].to_string());
        pairs.emplace_back(all[a], all[b]);
    }
    PairGraph out{Graph(std::move(labels)), std::move(pairs)};
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (table[idx[i].first * m + idx[j].second] == 0 && table[idx[j].first * m + idx[i].second] == 0)
                out.graph.add_edge(i, j);
    return out;
}

// Process-wide cache of projective targets; built once per (q, k).
template <typename T>
class TargetCache {
public:
    template <typename Build>
    std::shared_ptr<const T> get(std::uint32_t q, std::size_t k, Build build) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(q, k);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto value = std::make_shared<const T>(build());
        cache_.emplace(key, value);
        return value;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::uint32_t, std::size_t>, std::shared_ptr<const T>> cache_;
};

TargetCache<VectorGraph>& o_cache() {
    static TargetCache<VectorGraph> c;
    return c;
}

TargetCache<PairGraph>& oprime_cache() {
    static TargetCache<PairGraph> c;
    return c;
}

std::size_t clique_lower_bound(const Graph& g, const SearchLimits& limits) {
    CliqueOptions copts;
    copts.limits = limits;
    copts.max_vertices = g.num_vertices();
    return std::max<std::size_t>(1, max_clique(g, copts).vertices.size());
}

}  // namespace

VectorGraph build_O(gf::Field field, std::size_t k, TargetGuard guard) { return vector_graph(field, k, false, guard); }

VectorGraph build_O_projective(gf::Field field, std::size_t k, TargetGuard guard) {
    return vector_graph(field, k, true, guard);
}

PairGraph build_Oprime(gf::Field field, std::size_t k, TargetGuard guard) { return pair_graph(field, k, false, guard); }

PairGraph build_Oprime_projective(gf::Field field, std::size_t k, TargetGuard guard) {
    return pair_graph(field, k, true, guard);
}

bool verify_orth_rep(const Graph& g, const OrthRep& rep) {
    if (rep.vectors.size() != g.num_vertices()) return false;
    for (const auto& v : rep.vectors) {
        if (v.size() != rep.dim || !(v.field() == rep.field)) return false;
        if (gf::inner_product(v, v) == 0) return false;
    }
    for (const auto& [a, b] : g.edges())
        if (gf::inner_product(rep.vectors[a], rep.vectors[b]) != 0) return false;
    return true;
}

bool verify_repr_matrix(const Graph& g, const ReprMatrix& m) {
    const std::size_t n = g.num_vertices();
    if (m.matrix.rows() != n || m.matrix.cols() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (m.matrix.at(i, i) == 0) return false;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !g.has_edge(i, j) && m.matrix.at(i, j) != 0) return false;
    }
    return gf::rank(m.matrix) == m.rank;
}

gf::Matrix gram_matrix(gf::Field field, std::size_t n, const std::vector<VectorPair>& pairs) {
    gf::Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, gf::inner_product(pairs[i].first, pairs[j].second));
    return m;
}

OdResult orthogonality_dimension(const Graph& g, gf::Field field, const ParamOptions& opts) {
    OdResult out;
    if (g.num_vertices() == 0) {
        out.status = ParamStatus::exact;
        out.rep = OrthRep{field, 0, {}};
        return out;
    }
    out.lower_bound = clique_lower_bound(g, opts.limits);
    // a proper coloring with c colors gives the standard basis representation in F^c
    const Coloring greedy = greedy_dsatur(g);
    for (std::size_t k = out.lower_bound; k <= opts.k_max; ++k) {
        if (k >= greedy.used()) {
            OrthRep rep{field, k, {}};
            for (Vertex v = 0; v < g.num_vertices(); ++v) rep.vectors.push_back(gf::Vector::unit(field, k, greedy.colors[v]));
            out.status = ParamStatus::exact;
            out.k = k;
            out.rep = std::move(rep);
            return out;
        }
        std::shared_ptr<const VectorGraph> target;
        try {
            target = o_cache().get(field.order(), k, [&] { return build_O_projective(field, k, opts.guard); });
            HomOptions hopts;
            hopts.limits = opts.limits;
            HomResult r = find_homomorphism(g, target->graph, hopts);
            if (r.status == SearchStatus::unknown) {
                out.status = ParamStatus::unknown;
                out.k = k;
                out.note = "search budget exhausted at k=" + std::to_string(k);
                return out;
            }
            if (r.status == SearchStatus::found) {
                OrthRep rep{field, k, {}};
                for (Vertex v = 0; v < g.num_vertices(); ++v) rep.vectors.push_back(target->vectors[r.hom.map[v]]);
                if (!verify_orth_rep(g, rep)) throw std::logic_error("orthogonality_dimension produced an invalid witness");
                out.status = ParamStatus::exact;
                out.k = k;
                out.rep = std::move(rep);
                return out;
            }
        } catch (const GuardExceeded& e) {
            out.status = ParamStatus::unknown;
            out.k = k;
            out.note = e.what();
            return out;
        }
    }
    out.status = ParamStatus::exceeds;
    out.k = opts.k_max;
    return out;
}

MinrankResult minrank(const Graph& g, gf::Field field, const ParamOptions& opts) {
    MinrankResult out;
    const std::size_t n = g.num_vertices();
    if (n == 0) {
        out.status = ParamStatus::exact;
        out.matrix = ReprMatrix{gf::Matrix(field, 0, 0), 0};
        return out;
    }
    const Graph x = complement(g);
    out.lower_bound = clique_lower_bound(x, opts.limits);
    // a proper c-coloring of the complement gives the pairs (e_c(v), e_c(v)), rank c
    const Coloring greedy = greedy_dsatur(x);
    for (std::size_t k = out.lower_bound; k <= opts.k_max; ++k) {
        if (k >= greedy.used()) {
            for (Vertex v = 0; v < n; ++v) {
                const auto e = gf::Vector::unit(field, k, greedy.colors[v]);
                out.pairs.emplace_back(e, e);
            }
            gf::Matrix m = gram_matrix(field, n, out.pairs);
            ReprMatrix rm{std::move(m), k};
            if (!verify_repr_matrix(g, rm)) throw std::logic_error("minrank produced an invalid witness");
            out.status = ParamStatus::exact;
            out.k = k;
            out.matrix = std::move(rm);
            return out;
        }
        try {
            auto target =
                oprime_cache().get(field.order(), k, [&] { return build_Oprime_projective(field, k, opts.guard); });
            HomOptions hopts;
            hopts.limits = opts.limits;
            hopts.vertex_transitive_target = true;
            HomResult r = find_homomorphism(x, target->graph, hopts);
            if (r.status == SearchStatus::unknown) {
                out.status = ParamStatus::unknown;
                out.k = k;
                out.note = "search budget exhausted at k=" + std::to_string(k);
                return out;
            }
            if (r.status == SearchStatus::found) {
                for (Vertex v = 0; v < n; ++v) out.pairs.push_back(target->pairs[r.hom.map[v]]);
                gf::Matrix m = gram_matrix(field, n, out.pairs);
                const std::size_t r_m = gf::rank(m);
                if (r_m != k) throw std::logic_error("minrank witness rank differs from the minimal k");
                ReprMatrix rm{std::move(m), r_m};
                if (!verify_repr_matrix(g, rm)) throw std::logic_error("minrank produced an invalid witness");
                out.status = ParamStatus::exact;
                out.k = k;
                out.matrix = std::move(rm);
                return out;
            }
        } catch (const GuardExceeded& e) {
            out.status = ParamStatus::unknown;
            out.k = k;
            out.note = e.what();
            return out;
        }
    }
    out.status = ParamStatus::exceeds;
    out.k = opts.k_max;
    return out;
}

}  // namespace odlab
