#pragma once
// Floating-point constructions over R: the rounding coloring of S(R,n),
// the sign-vector coloring of O(R,n), a generator of adjacent S(R,n) pairs
// and the double-shift graph.

#include <cstdint>
#include <string>
#include <vector>

#include "odlab/graph.hpp"

namespace odlab::real {

inline constexpr double kTol = 1e-9;

using RVec = std::vector<double>;

double dot(const RVec& a, const RVec& b);

class RealSubspace {
public:
    // Orthonormal basis, checked against kTol. Throws InvalidArgument otherwise.
    RealSubspace(std::size_t n, std::vector<RVec> basis);
    // Gram-Schmidt over the generators in order; near-zero residuals are dropped.
    static RealSubspace span(std::size_t n, const std::vector<RVec>& gens);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<RVec>& basis() const { return basis_; }
    // Distance from v to its orthogonal projection onto the subspace.
    double distance(const RVec& v) const;
    bool contains(const RVec& v, double tol = kTol) const { return distance(v) <= tol; }
    // |<v, b>| <= tol for every basis vector b.
    bool orthogonal_to(const RVec& v, double tol = kTol) const;

private:
    std::size_t n_;
    std::vector<RVec> basis_;
};

// n x n matrix of integer numerators over denominator n, column-major.
// Column j is the rounded j-th basis vector; columns past dim are zero.
struct RoundedColor {
    std::size_t n = 0;
    std::vector<int> numerators;
    int at(std::size_t row, std::size_t col) const { return numerators[col * n + row]; }
    std::string to_string() const;
    auto operator<=>(const RoundedColor&) const = default;
};

// Nearest multiple of 1/n; an exact tie goes to the smaller multiple.
int round_to_multiple(double x, std::size_t n);

RoundedColor subspace_color(const RealSubspace& u);
// Largest |entry - original| over the basis matrix.
double rounding_error(const RealSubspace& u, const RoundedColor& c);

// -1, 0, +1 per coordinate, with |x| <= tol counted as zero.
std::vector<int> sign_coloring(const RVec& v, double tol = kTol);
std::string sign_string(const std::vector<int>& s);

struct RealSPair {
    RealSubspace u_space;
    RealSubspace v_space;
    RVec u;  // unit, in U and orthogonal to V
    RVec v;  // unit, in V and orthogonal to U
};

// Deterministic per (n, seed). n >= 2.
RealSPair random_adjacent_S_pair(std::size_t n, std::uint64_t seed);
// Checks the adjacency witnesses of a pair within tol.
bool check_adjacent_witnesses(const RealSPair& p, double tol = kTol);

}  // namespace odlab::real

namespace odlab {

// 3-subsets of [n]; x ~ y when (x2,x3) = (y1,y2) or (x1,x2) = (y2,y3). n >= 4.
Graph double_shift_graph(std::size_t n);

}  // namespace odlab
