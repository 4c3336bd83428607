#include <doctest.h>

#include <algorithm>
#include <random>

#include "odlab/errors.hpp"
#include "odlab/gf.hpp"
#include "oracles.hpp"

using namespace odlab;
using namespace odlab::gf;

namespace {

Vector vec(std::uint32_t q, std::vector<Elem> c) { return Vector(Field(q), std::move(c)); }

Subspace span_of(std::uint32_t q, std::vector<std::vector<Elem>> gens) {
    std::vector<Vector> vs;
    const std::size_t n = gens.at(0).size();
    for (auto& g : gens) vs.push_back(vec(q, g));
    return Subspace::span(Field(q), n, vs);
}

// Elements of a subspace, independently: all vectors orthogonal to every
// complement basis vector would use the code under test, so use membership.
std::size_t count_members(const Subspace& u) {
    std::size_t c = 0;
    for (const auto& v : all_vectors(u.field(), u.ambient_dim())) c += u.contains(v);
    return c;
}

}  // namespace

TEST_CASE("field arithmetic") {
    CHECK_THROWS_AS(Field(4), InvalidArgument);
    CHECK_THROWS_AS(Field(1), InvalidArgument);
    const Field f(7);
    for (Elem a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.neg(3) == 4);
    CHECK_THROWS(f.inv(0));
    const Field big(65521);
    CHECK(big.mul(65520, 65520) == 1);
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(Field(2), 3)) == 3);
    CHECK(rank(Matrix::from_rows(Field(2), {{1, 1}, {1, 1}})) == 1);
    CHECK(rank(Matrix::from_rows(Field(3), {{1, 2}, {2, 1}})) == 1);
}

TEST_CASE("rank matches the elimination oracle on random matrices") {
    std::mt19937_64 rng(3);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (int t = 0; t < 200; ++t) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            std::vector<std::vector<Elem>> rows(r, std::vector<Elem>(c));
            for (auto& row : rows)
                for (auto& x : row) x = static_cast<Elem>(rng() % q);
            std::vector<std::vector<std::uint32_t>> copy(rows.begin(), rows.end());
            CHECK(rank(Matrix::from_rows(Field(q), rows)) == oracle::rank(q, copy));
        }
    }
}

TEST_CASE("inner products") {
    CHECK(inner_product(vec(2, {1, 0}), vec(2, {0, 1})) == 0);
    CHECK(inner_product(vec(2, {1, 1}), vec(2, {1, 1})) == 0);
    CHECK(inner_product(vec(3, {1, 1}), vec(3, {1, 1})) == 2);
    CHECK_THROWS_AS(inner_product(vec(3, {1, 1}), vec(3, {1, 1, 0})), InvalidArgument);
}

TEST_CASE("orthogonal complement examples") {
    CHECK(orthogonal_complement(span_of(2, {{1, 0}})) == span_of(2, {{0, 1}}));
    CHECK(orthogonal_complement(Subspace::zero(Field(3), 2)) == Subspace::full(Field(3), 2));
    const auto u = span_of(2, {{1, 1, 0}});
    const auto c = orthogonal_complement(u);
    CHECK(c == span_of(2, {{1, 1, 0}, {0, 0, 1}}));
    CHECK(c.contains(vec(2, {1, 1, 0})));
}

TEST_CASE("intersection examples") {
    const auto u = span_of(3, {{1, 2, 0}, {0, 1, 1}});
    CHECK(intersect(u, u) == u);
    CHECK(intersect(span_of(2, {{1, 0}}), span_of(2, {{0, 1}})).dim() == 0);
    CHECK(intersect(span_of(3, {{1, 0}, {0, 1}}), span_of(3, {{1, 1}})) == span_of(3, {{1, 1}}));
}

TEST_CASE("complement and intersection against membership oracles") {
    for (std::uint32_t q : {2u, 3u}) {
        const std::size_t n = 3;
        const auto subs = enumerate_subspaces(Field(q), n);
        for (const auto& u : subs) {
            const auto c = orthogonal_complement(u);
            CHECK(u.dim() + c.dim() == n);
            CHECK(orthogonal_complement(c) == u);
            // every member of c is orthogonal to every member of u
            for (const auto& x : c.elements())
                for (const auto& y : u.elements()) CHECK(inner_product(x, y) == 0);
            CHECK(count_members(u) == u.cardinality());
        }
        for (std::size_t a = 0; a < subs.size(); a += 3)
            for (std::size_t b = 0; b < subs.size(); b += 2) {
                const auto i = intersect(subs[a], subs[b]);
                std::size_t both = 0;
                for (const auto& v : all_vectors(Field(q), n)) both += subs[a].contains(v) && subs[b].contains(v);
                CHECK(i.cardinality() == both);
            }
    }
}

TEST_CASE("subspace enumeration counts") {
    CHECK(enumerate_subspaces(Field(2), 2).size() == 5);
    CHECK(enumerate_subspaces(Field(2), 3).size() == 16);
    CHECK(enumerate_subspaces(Field(3), 2).size() == 6);
    for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
        CAPTURE(q);
        CAPTURE(n);
        const auto subs = enumerate_subspaces(Field(q), n);
        CHECK(subs.size() == subspace_count(q, n));
        CHECK(std::is_sorted(subs.begin(), subs.end()));
        CHECK(std::adjacent_find(subs.begin(), subs.end()) == subs.end());
        if (gf::checked_pow(q, n, 100) <= 27) CHECK(subs.size() == oracle::subspace_count_by_spans(q, n));
    }
    CHECK(gaussian_binomial(2, 4, 2) == 35);
    CHECK(gaussian_binomial(3, 3, 1) == 13);
    CHECK_THROWS_AS(enumerate_subspaces(Field(7), 2), GuardExceeded);
}

TEST_CASE("non-self-orthogonal vectors") {
    CHECK(find_nonisotropic(span_of(2, {{1, 0}})) == vec(2, {1, 0}));
    CHECK(!find_nonisotropic(span_of(2, {{1, 1}})).has_value());
    const auto w = find_nonisotropic(span_of(3, {{1, 1}}));
    REQUIRE(w.has_value());
    CHECK(inner_product(*w, *w) == 2);
    CHECK(!find_nonisotropic(Subspace::zero(Field(3), 2)).has_value());
}

TEST_CASE("subspace printing and canonical bases") {
    CHECK(Subspace::zero(Field(2), 2).to_string() == "{0}");
    CHECK(span_of(3, {{2, 2}}) == span_of(3, {{1, 1}}));
    CHECK(span_of(3, {{2, 2}}).basis_vectors().at(0) == vec(3, {1, 1}));
}
