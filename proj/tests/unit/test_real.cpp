#include <doctest.h>

#include <cmath>

#include "odlab/errors.hpp"
#include "odlab/real_dim.hpp"

using namespace odlab;
using namespace odlab::real;

TEST_CASE("rounding coloring examples") {
    const auto e1 = RealSubspace::span(3, {{1, 0, 0}});
    const auto c = subspace_color(e1);
    CHECK(c.at(0, 0) == 3);
    CHECK(c.at(1, 0) == 0);
    CHECK(c.at(2, 0) == 0);
    for (std::size_t col = 1; col < 3; ++col)
        for (std::size_t row = 0; row < 3; ++row) CHECK(c.at(row, col) == 0);

    const double h = 1.0 / std::sqrt(2.0);
    const auto d = subspace_color(RealSubspace(2, {{h, h}}));
    // nearest multiple of 1/2 to 0.7071 is 0.5
    CHECK(d.at(0, 0) == 1);
    CHECK(d.at(1, 0) == 1);

    const auto z = subspace_color(RealSubspace(4, {}));
    for (int x : z.numerators) CHECK(x == 0);
    CHECK(z.numerators.size() == 16);
}

TEST_CASE("rounding ties go to the smaller multiple") {
    CHECK(round_to_multiple(0.25, 2) == 0);
    CHECK(round_to_multiple(-0.25, 2) == -1);
    CHECK(round_to_multiple(0.26, 2) == 1);
    CHECK(round_to_multiple(1.0, 3) == 3);
    CHECK(round_to_multiple(-1.0, 3) == -3);
}

TEST_CASE("non-orthonormal input is rejected") {
    CHECK_THROWS_AS(RealSubspace(2, {{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(RealSubspace(2, {{1, 0}, {1, 0}}), InvalidArgument);
    CHECK(RealSubspace::span(3, {{1, 1, 0}, {2, 2, 0}}).dim() == 1);
}

TEST_CASE("sign coloring") {
    CHECK(sign_coloring({0.5, -2, 0}) == std::vector<int>{1, -1, 0});
    CHECK(sign_coloring({1, 0, 0}) == std::vector<int>{1, 0, 0});
    CHECK(sign_coloring({1, 0}) != sign_coloring({0, 1}));
    CHECK(sign_string(sign_coloring({0.5, -2, 1e-12})) == "+-0");
}

TEST_CASE("generated adjacent pairs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto p = random_adjacent_S_pair(2, seed);
        CHECK(p.u_space.dim() == 1);
        CHECK(p.v_space.dim() == 1);
        CHECK(std::abs(dot(p.u, p.v)) < kTol);
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) CHECK(check_adjacent_witnesses(random_adjacent_S_pair(4, seed)));
    const auto a = random_adjacent_S_pair(5, 42);
    const auto b = random_adjacent_S_pair(5, 42);
    CHECK(subspace_color(a.u_space) == subspace_color(b.u_space));
    CHECK_THROWS_AS(random_adjacent_S_pair(1, 0), InvalidArgument);
}

TEST_CASE("rounded colors stay in range and within the error bound") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto p = random_adjacent_S_pair(n, seed);
            for (const auto* u : {&p.u_space, &p.v_space}) {
                const auto c = subspace_color(*u);
                for (int x : c.numerators) CHECK(std::abs(x) <= static_cast<int>(n));
                CHECK(rounding_error(*u, c) <= 1.0 / (2.0 * n) + kTol);
            }
            CHECK(subspace_color(p.u_space) != subspace_color(p.v_space));
        }
}
