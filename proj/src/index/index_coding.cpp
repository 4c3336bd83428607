#include "odlab/index_coding.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace odlab {

std::vector<std::uint32_t> word_of(std::uint64_t idx, std::uint32_t s, std::size_t len) {
    std::vector<std::uint32_t> w(len);
    for (std::size_t i = len; i-- > 0;) {
        w[i] = static_cast<std::uint32_t>(idx % s);
        idx /= s;
    }
    return w;
}

std::uint64_t index_of_word(const std::vector<std::uint32_t>& w, std::uint32_t s) {
    std::uint64_t idx = 0;
    for (auto d : w) idx = idx * s + d;
    return idx;
}

namespace {

std::uint64_t message_count(std::uint32_t s, std::size_t n) {
    const std::uint64_t m = gf::checked_pow(s, n, kMaxMessages);
    if (m > kMaxMessages) throw GuardExceeded("index code: s^n exceeds 2^20 messages");
    return m;
}

void check_shape(const Graph& g, const IndexCode& code) {
    if (code.s < 2) throw InvalidArgument("index code: alphabet needs at least 2 symbols");
    if (code.n != g.num_vertices()) throw InvalidArgument("index code: receiver count differs from |V|");
    const std::uint64_t m = message_count(code.s, code.n);
    if (code.table.size() != m) throw InvalidArgument("index code: encoder table is not total");
    const std::uint64_t words = gf::checked_pow(code.s, code.k, std::uint64_t{1} << 32);
    for (auto c : code.table)
        if (c >= words) throw InvalidArgument("index code: codeword out of range");
}

// digit[i][msg] and the side-information key of msg for each receiver.
struct MessageDigits {
    std::vector<std::vector<std::uint32_t>> digit;  // [receiver][msg]
    std::vector<std::vector<std::uint64_t>> side;   // [receiver][msg]
};

MessageDigits digits_and_keys(const Graph& g, std::uint32_t s, std::size_t n, std::uint64_t m) {
    MessageDigits d{std::vector<std::vector<std::uint32_t>>(n, std::vector<std::uint32_t>(m)),
                    std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(m))};
    for (std::uint64_t x = 0; x < m; ++x) {
        const auto w = word_of(x, s, n);
        for (std::size_t i = 0; i < n; ++i) {
            d.digit[i][x] = w[i];
            std::uint64_t key = 0;
            for (auto j : g.neighbors(i)) key = key * s + w[j];
            d.side[i][x] = key;
        }
    }
    return d;
}

}  // namespace

IndexCode identity_code(std::uint32_t s, std::size_t n) {
    const std::uint64_t m = message_count(s, n);
    IndexCode code{s, n, n, std::vector<std::uint32_t>(m), std::nullopt};
    for (std::uint64_t x = 0; x < m; ++x) code.table[x] = static_cast<std::uint32_t>(x);
    if (gf::is_prime(s)) code.linear = gf::Matrix::identity(gf::Field(s), n);
    return code;
}

namespace {

// Per-receiver map from (codeword, side information) to the symbol seen there.
class DecodeTable {
public:
    DecodeTable(std::uint64_t words, std::uint64_t side_words) : side_words_(side_words) {
        const std::uint64_t size = words * side_words;
        if (words != 0 && size / words == side_words && size <= (std::uint64_t{1} << 22)) flat_.assign(size, -1);
    }
    // False when the slot already holds a different symbol.
    bool record(std::uint64_t codeword, std::uint64_t side, std::uint32_t symbol) {
        const std::uint64_t key = codeword * side_words_ + side;
        if (!flat_.empty()) {
            auto& slot = flat_[key];
            if (slot < 0) slot = static_cast<std::int64_t>(symbol);
            return slot == static_cast<std::int64_t>(symbol);
        }
        auto [it, fresh] = map_.emplace(key, symbol);
        return fresh || it->second == symbol;
    }

private:
    std::uint64_t side_words_;
    std::vector<std::int64_t> flat_;
    std::unordered_map<std::uint64_t, std::uint32_t> map_;
};

// Calls visit(x, word) for every message in index order.
template <class F>
void for_each_message(std::uint32_t s, std::size_t n, std::uint64_t m, F&& visit) {
    std::vector<std::uint32_t> w(n, 0);
    for (std::uint64_t x = 0; x < m; ++x) {
        visit(x, w);
        for (std::size_t i = n; i-- > 0;) {
            if (++w[i] < s) break;
            w[i] = 0;
        }
    }
}

}  // namespace

bool verify_index_code(const Graph& g, const IndexCode& code) {
    check_shape(g, code);
    const std::uint64_t m = code.table.size();
    const std::uint64_t words = gf::checked_pow(code.s, code.k, std::uint64_t{1} << 32);
    std::vector<std::vector<Vertex>> nbrs(code.n);
    std::vector<DecodeTable> tables;
    for (std::size_t i = 0; i < code.n; ++i) {
        nbrs[i] = g.neighbors(i);
        const std::uint64_t side_words = gf::checked_pow(code.s, nbrs[i].size(), std::uint64_t{1} << 40);
        tables.emplace_back(words, side_words);
    }
    bool ok = true;
    for_each_message(code.s, code.n, m, [&](std::uint64_t x, const std::vector<std::uint32_t>& w) {
        if (!ok) return;
        for (std::size_t i = 0; i < code.n; ++i) {
            std::uint64_t key = 0;
            for (auto j : nbrs[i]) key = key * code.s + w[j];
            if (!tables[i].record(code.table[x], key, w[i])) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

IndexCode linear_code_from_matrix(const Graph& g, const ReprMatrix& m) {
    if (!verify_repr_matrix(g, m)) throw InvalidWitness("matrix does not represent the graph");
    const gf::Field f = m.matrix.field();
    const std::size_t n = g.num_vertices();
    std::vector<gf::Vector> rows;
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto trial = rows;
        trial.push_back(m.matrix.row(i));
        const std::size_t tr = gf::rank(gf::Matrix::from_vectors(f, n, trial));
        if (tr > r) {
            rows = std::move(trial);
            r = tr;
        }
    }
    const std::size_t k = rows.size();
    const std::uint64_t cnt = message_count(f.order(), n);
    IndexCode code{f.order(), n, k, std::vector<std::uint32_t>(cnt), gf::Matrix::from_vectors(f, n, rows)};
    for (std::uint64_t x = 0; x < cnt; ++x) {
        const auto w = word_of(x, f.order(), n);
        std::vector<std::uint32_t> c(k);
        for (std::size_t a = 0; a < k; ++a) {
            gf::Elem acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc = f.add(acc, f.mul(rows[a][j], static_cast<gf::Elem>(w[j])));
            c[a] = acc;
        }
        code.table[x] = static_cast<std::uint32_t>(index_of_word(c, f.order()));
    }
    return code;
}

namespace {

// Two messages are confusable when some receiver sees the same side
// information but needs different symbols; a valid encoder separates them.
std::vector<std::vector<std::uint32_t>> confusable_earlier(const Graph& g, std::uint32_t s, std::size_t n,
                                                           std::uint64_t m) {
    const auto d = digits_and_keys(g, s, n, m);
    std::vector<std::vector<std::uint32_t>> conf(m);
    for (std::uint64_t x = 0; x < m; ++x)
        for (std::uint64_t y = 0; y < x; ++y)
            for (std::size_t i = 0; i < n; ++i)
                if (d.side[i][x] == d.side[i][y] && d.digit[i][x] != d.digit[i][y]) {
                    conf[x].push_back(static_cast<std::uint32_t>(y));
                    break;
                }
    return conf;
}

// Every encoder table in lexicographic order, stopping at the first valid one.
std::optional<std::vector<std::uint32_t>> enumerate_tables(const Graph& g, std::uint32_t s, std::size_t n,
                                                           std::size_t k, Budget& budget) {
    const std::uint64_t m = message_count(s, n);
    const std::uint32_t words = static_cast<std::uint32_t>(gf::checked_pow(s, k, kMaxMessages));
    IndexCode code{s, n, k, std::vector<std::uint32_t>(m, 0), std::nullopt};
    while (true) {
        if (!budget.step()) return std::nullopt;
        if (verify_index_code(g, code)) return code.table;
        std::uint64_t pos = m;
        while (pos > 0 && code.table[pos - 1] + 1 == words) code.table[--pos] = 0;
        if (pos == 0) return std::vector<std::uint32_t>{};
        ++code.table[pos - 1];
    }
}

class CanonicalSearch {
public:
    CanonicalSearch(std::vector<std::vector<std::uint32_t>> conf, std::uint32_t words, Budget& budget)
        : conf_(std::move(conf)), words_(words), budget_(budget), table_(conf_.size(), 0) {}

    SearchStatus run() {
        const auto r = extend(0, 0);
        return r;
    }
    const std::vector<std::uint32_t>& table() const { return table_; }

private:
    SearchStatus extend(std::size_t x, std::uint32_t used) {
        if (x == table_.size()) return SearchStatus::found;
        if (!budget_.step()) return SearchStatus::unknown;
        const std::uint32_t limit = std::min(words_, used + 1);
        for (std::uint32_t c = 0; c < limit; ++c) {
            bool ok = true;
            for (auto y : conf_[x])
                if (table_[y] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            table_[x] = c;
            const auto r = extend(x + 1, std::max(used, c + 1));
            if (r != SearchStatus::none) return r;
        }
        return SearchStatus::none;
    }

    std::vector<std::vector<std::uint32_t>> conf_;
    std::uint32_t words_;
    Budget& budget_;
    std::vector<std::uint32_t> table_;
};

}  // namespace

BruteForceResult optimal_index_code_bruteforce(const Graph& g, std::uint32_t s, const BruteForceOptions& opts) {
    const std::size_t n = g.num_vertices();
    if (n > 4) throw GuardExceeded("brute-force index code search is limited to n <= 4");
    if (s < 2) throw InvalidArgument("index code: alphabet needs at least 2 symbols");
    const std::uint64_t m = message_count(s, n);
    BruteForceResult res;
    Budget budget(opts.limits);
    const bool exhaustive = n <= 3;
    for (std::size_t k = n == 0 ? 0 : 1; k <= std::min(n, opts.k_max); ++k) {
        if (k == n) {
            // no side information helps beyond sending everything
            res.status = ParamStatus::exact;
            res.k = n;
            res.code = identity_code(s, n);
            res.nodes = budget.nodes();
            return res;
        }
        std::optional<std::vector<std::uint32_t>> table;
        bool unknown = false;
        const std::uint64_t tables = gf::checked_pow(gf::checked_pow(s, k, 1u << 20), m, std::uint64_t{1} << 26);
        if (exhaustive && tables <= (std::uint64_t{1} << 26)) {
            auto t = enumerate_tables(g, s, n, k, budget);
            if (!t) unknown = true;
            else if (!t->empty()) table = std::move(*t);
        } else {
            const auto words = static_cast<std::uint32_t>(gf::checked_pow(s, k, kMaxMessages));
            CanonicalSearch search(confusable_earlier(g, s, n, m), words, budget);
            const auto st = search.run();
            if (st == SearchStatus::unknown) unknown = true;
            else if (st == SearchStatus::found) table = search.table();
        }
        if (unknown) {
            res.status = ParamStatus::unknown;
            res.k = k;
            res.nodes = budget.nodes();
            return res;
        }
        if (table) {
            IndexCode code{s, n, k, std::move(*table), std::nullopt};
            if (!verify_index_code(g, code)) throw std::logic_error("brute-force search produced an invalid code");
            res.status = ParamStatus::exact;
            res.k = k;
            res.code = std::move(code);
            res.nodes = budget.nodes();
            return res;
        }
    }
    res.status = ParamStatus::exceeds;
    res.k = opts.k_max;
    res.nodes = budget.nodes();
    return res;
}

std::vector<std::vector<bool>> receiver_truth_tables(const Graph& side_info, const IndexCode& code) {
    if (!verify_index_code(side_info, code)) throw InvalidWitness("index code is not valid for the side-information graph");
    const std::uint64_t words = gf::checked_pow(code.s, code.k, kMaxMessages);
    if (words > kMaxMessages) throw GuardExceeded("index code: s^k exceeds 2^20 codewords");
    std::vector<std::vector<bool>> tables(code.n, std::vector<bool>(words, false));
    std::vector<std::vector<Vertex>> nbrs(code.n);
    for (std::size_t i = 0; i < code.n; ++i) nbrs[i] = side_info.neighbors(i);
    for_each_message(code.s, code.n, code.table.size(), [&](std::uint64_t x, const std::vector<std::uint32_t>& w) {
        for (std::size_t i = 0; i < code.n; ++i) {
            if (w[i] == 0) continue;
            // all-zero side information; validity makes the decoded symbol unique
            bool zero_side = true;
            for (auto j : nbrs[i]) zero_side = zero_side && w[j] == 0;
            if (zero_side) tables[i][code.table[x]] = true;
        }
    });
    return tables;
}

namespace {

Coloring rank_tables(const std::vector<std::vector<bool>>& tables) {
    std::map<std::vector<bool>, std::uint32_t> ids;
    for (const auto& t : tables) ids.emplace(t, 0);
    std::uint32_t next = 0;
    for (auto& [t, id] : ids) id = next++;
    Coloring c;
    c.palette = next;
    for (const auto& t : tables) c.colors.push_back(ids.at(t));
    return c;
}

}  // namespace

Coloring coloring_from_index_code(const Graph& g, const IndexCode& code) {
    const auto tables = receiver_truth_tables(complement(g), code);
    Coloring c = rank_tables(tables);
    if (!verify_coloring(g, c)) throw InvalidWitness("extracted coloring is not proper");
    return c;
}

Coloring line_coloring_from_index_code(const Graph& g, const IndexCode& code) {
    const LineDigraph line = line_digraph(g);
    const Graph hbar = complement(underlying_graph(line.digraph));
    const auto arc_tables = receiver_truth_tables(hbar, code);
    const std::size_t words = arc_tables.empty() ? gf::checked_pow(code.s, code.k, kMaxMessages) : arc_tables[0].size();
    std::vector<std::vector<bool>> tables(g.num_vertices(), std::vector<bool>(words, false));
    for (std::size_t a = 0; a < line.arcs.size(); ++a)
        for (std::size_t y = 0; y < words; ++y)
            if (arc_tables[a][y]) tables[line.arcs[a].head][y] = true;
    Coloring c = rank_tables(tables);
    if (!verify_coloring(g, c)) throw InvalidWitness("extracted coloring is not proper");
    return c;
}

}  // namespace odlab
