#include "odlab/real_dim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "odlab/errors.hpp"

namespace odlab::real {

double dot(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw InvalidArgument("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

void axpy(RVec& y, double a, const RVec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

double norm(const RVec& v) { return std::sqrt(dot(v, v)); }

// Two passes of modified Gram-Schmidt against `basis`.
RVec orthogonalize(RVec v, const std::vector<RVec>& basis) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) axpy(v, -dot(v, b), b);
    return v;
}

}  // namespace

RealSubspace::RealSubspace(std::size_t n, std::vector<RVec> basis) : n_(n), basis_(std::move(basis)) {
    if (basis_.size() > n_) throw InvalidArgument("RealSubspace: more basis vectors than the ambient dimension");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].size() != n_) throw InvalidArgument("RealSubspace: basis vector of wrong length");
        if (std::abs(dot(basis_[i], basis_[i]) - 1.0) > kTol) throw InvalidArgument("RealSubspace: basis not normalized");
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(dot(basis_[i], basis_[j])) > kTol) throw InvalidArgument("RealSubspace: basis not orthogonal");
    }
}

RealSubspace RealSubspace::span(std::size_t n, const std::vector<RVec>& gens) {
    std::vector<RVec> basis;
    for (const auto& g : gens) {
        if (g.size() != n) throw InvalidArgument("RealSubspace::span: generator of wrong length");
        RVec r = orthogonalize(g, basis);
        const double len = norm(r);
        if (len <= 1e-7 * std::max(1.0, norm(g))) continue;
        for (auto& x : r) x /= len;
        basis.push_back(std::move(r));
    }
    return RealSubspace(n, std::move(basis));
}

double RealSubspace::distance(const RVec& v) const { return norm(orthogonalize(v, basis_)); }

bool RealSubspace::orthogonal_to(const RVec& v, double tol) const {
    for (const auto& b : basis_)
        if (std::abs(dot(b, v)) > tol) return false;
    return true;
}

std::string RoundedColor::to_string() const {
    std::string s = "[";
    for (std::size_t c = 0; c < n; ++c) {
        if (c) s += ";";
        for (std::size_t r = 0; r < n; ++r) s += (r ? "," : "") + std::to_string(at(r, c));
    }
    return s + "]/" + std::to_string(n);
}

int round_to_multiple(double x, std::size_t n) {
    const double scaled = x * static_cast<double>(n);
    const double lo = std::floor(scaled);
    int r = static_cast<int>(lo);
    if (scaled - lo > 0.5) ++r;
    const int m = static_cast<int>(n);
    return std::clamp(r, -m, m);
}

RoundedColor subspace_color(const RealSubspace& u) {
    const std::size_t n = u.ambient_dim();
    RoundedColor c{n, std::vector<int>(n * n, 0)};
    for (std::size_t col = 0; col < u.dim(); ++col)
        for (std::size_t row = 0; row < n; ++row) c.numerators[col * n + row] = round_to_multiple(u.basis()[col][row], n);
    return c;
}

double rounding_error(const RealSubspace& u, const RoundedColor& c) {
    const std::size_t n = u.ambient_dim();
    double worst = 0.0;
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row) {
            const double orig = col < u.dim() ? u.basis()[col][row] : 0.0;
            worst = std::max(worst, std::abs(orig - c.at(row, col) / static_cast<double>(n)));
        }
    return worst;
}

std::vector<int> sign_coloring(const RVec& v, double tol) {
    std::vector<int> s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] > tol ? 1 : (v[i] < -tol ? -1 : 0);
    return s;
}

std::string sign_string(const std::vector<int>& s) {
    std::string out;
    for (int x : s) out += x > 0 ? '+' : (x < 0 ? '-' : '0');
    return out;
}

RealSPair random_adjacent_S_pair(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw InvalidArgument("random_adjacent_S_pair needs n >= 2");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    auto draw = [&] {
        RVec v(n);
        for (auto& x : v) x = gauss(rng);
        return v;
    };
    // u, v orthonormal; redraw on the (measure-zero) degenerate case
    RealSubspace uv = RealSubspace::span(n, {draw(), draw()});
    while (uv.dim() < 2) uv = RealSubspace::span(n, {draw(), draw()});
    const RVec u = uv.basis()[0];
    const RVec v = uv.basis()[1];

    const std::size_t extra_u = rng() % (n - 1);
    const std::size_t extra_v = rng() % (n - 1);
    std::vector<RVec> gu{u};
    for (std::size_t i = 0; i < extra_u; ++i) gu.push_back(orthogonalize(draw(), {v}));
    std::vector<RVec> gv{v};
    for (std::size_t i = 0; i < extra_v; ++i) gv.push_back(orthogonalize(draw(), {u}));
    return RealSPair{RealSubspace::span(n, gu), RealSubspace::span(n, gv), u, v};
}

bool check_adjacent_witnesses(const RealSPair& p, double tol) {
    return p.u_space.contains(p.u, tol) && p.v_space.orthogonal_to(p.u, tol) && p.v_space.contains(p.v, tol) &&
           p.u_space.orthogonal_to(p.v, tol) && std::abs(norm(p.u) - 1.0) <= tol && std::abs(norm(p.v) - 1.0) <= tol;
}

}  // namespace odlab::real

namespace odlab {

Graph double_shift_graph(std::size_t n) {
    if (n < 4) throw InvalidArgument("double_shift_graph needs n >= 4");
    std::vector<std::array<std::size_t, 3>> triples;
    std::vector<std::string> labels;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b)
            for (std::size_t c = b + 1; c <= n; ++c) {
                triples.push_back({a, b, c});
                labels.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "}");
            }
    Graph g(std::move(labels));
    for (std::size_t i = 0; i < triples.size(); ++i)
        for (std::size_t j = i + 1; j < triples.size(); ++j) {
            const auto& x = triples[i];
            const auto& y = triples[j];
            const bool fwd = x[1] == y[0] && x[2] == y[1];
            const bool back = x[0] == y[1] && x[1] == y[2];
            if (fwd || back) g.add_edge(i, j);
        }
    return g;
}

}  // namespace odlab
