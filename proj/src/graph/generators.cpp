#include "odlab/generators.hpp"

#include <random>

#include "odlab/errors.hpp"
#include "odlab/real_dim.hpp"

namespace odlab::gen {

Graph cycle(std::size_t n) {
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph empty(std::size_t n) { return Graph(n); }

Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph petersen() { return kneser(5, 2); }

Graph kneser(std::size_t n, std::size_t k) {
    if (k == 0 || k > n) throw InvalidArgument("kneser needs 1 <= k <= n");
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
        sets.push_back(comb);
        std::size_t i = k;
        while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    std::vector<std::string> labels;
    for (const auto& s : sets) {
        std::string l = "{";
        for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + std::to_string(s[i] + 1);
        labels.push_back(l + "}");
    }
    Graph g(std::move(labels));
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            bool disjoint = true;
            for (auto x : sets[a])
                for (auto y : sets[b]) disjoint = disjoint && x != y;
            if (disjoint) g.add_edge(a, b);
        }
    return g;
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw InvalidArgument("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            // 53-bit uniform in [0,1) from one engine draw, portable across standard libraries
            const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < p) g.add_edge(u, v);
        }
    return g;
}

namespace {

std::size_t arg_count(const std::vector<std::string>& args, std::size_t i, const std::string& name) {
    if (i >= args.size()) throw InvalidArgument("gen " + name + ": missing argument");
    return std::stoul(args[i]);
}

}  // namespace

Graph by_name(const std::string& name, const std::vector<std::string>& args) {
    if (name == "cycle") return cycle(arg_count(args, 0, name));
    if (name == "complete") return complete(arg_count(args, 0, name));
    if (name == "empty") return empty(arg_count(args, 0, name));
    if (name == "path") return path(arg_count(args, 0, name));
    if (name == "star") return star(arg_count(args, 0, name));
    if (name == "petersen") return petersen();
    if (name == "kneser") return kneser(arg_count(args, 0, name), arg_count(args, 1, name));
    if (name == "double-shift") return double_shift_graph(arg_count(args, 0, name));
    if (name == "random") {
        if (args.size() < 3) throw InvalidArgument("gen random: expected <n> <p> <seed>");
        return random_gnp(std::stoul(args[0]), std::stod(args[1]), std::stoull(args[2]));
    }
    throw InvalidArgument("unknown graph family '" + name + "'");
}

}  // namespace odlab::gen
