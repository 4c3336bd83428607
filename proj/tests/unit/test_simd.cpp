#include <doctest.h>

#include <random>
#include <vector>

#include "odlab/bitset.hpp"
#include "odlab/simd/kernels.hpp"

using namespace odlab;
using simd::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n) {
    std::vector<Word> v(n);
    for (auto& w : v) {
        w = rng();
        // sparse and empty words too, so the any/intersects early exits get exercised
        if (rng() % 4 == 0) w &= rng() & rng();
        if (rng() % 8 == 0) w = 0;
    }
    return v;
}

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("dispatcher reports a supported isa") {
    const auto isa = simd::active_isa();
    CHECK(simd::cpu_supports(isa));
    CHECK(!simd::isa_name(isa).empty());
}

#if ODLAB_SIMD_X86
TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!simd::cpu_supports(simd::Isa::avx2)) return;
    std::mt19937_64 rng(7);
    // lengths around the 4-word vector width and its tails
    for (std::size_t len : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100}) {
        for (int rep = 0; rep < 50; ++rep) {
            auto a = random_words(rng, len);
            auto b = random_words(rng, len);
            CHECK(simd::scalar::popcount(a) == simd::avx2::popcount(a));
            CHECK(simd::scalar::and_popcount(a, b) == simd::avx2::and_popcount(a, b));
            CHECK(simd::scalar::intersects(a, b) == simd::avx2::intersects(a, b));
            CHECK(simd::scalar::any(a) == simd::avx2::any(a));
            auto s1 = a, s2 = a;
            simd::scalar::and_into(s1, b);
            simd::avx2::and_into(s2, b);
            CHECK(s1 == s2);
            s1 = a, s2 = a;
            simd::scalar::andnot_into(s1, b);
            simd::avx2::andnot_into(s2, b);
            CHECK(s1 == s2);
            std::vector<Word> d1(len), d2(len);
            simd::scalar::and_to(d1, a, b);
            simd::avx2::and_to(d2, a, b);
            CHECK(d1 == d2);
        }
    }
}
#endif

TEST_CASE("dispatched kernels agree with the scalar reference") {
    std::mt19937_64 rng(11);
    for (std::size_t len : {0, 1, 5, 12, 40}) {
        auto a = random_words(rng, len);
        auto b = random_words(rng, len);
        CHECK(simd::popcount(a) == simd::scalar::popcount(a));
        CHECK(simd::and_popcount(a, b) == simd::scalar::and_popcount(a, b));
        CHECK(simd::intersects(a, b) == simd::scalar::intersects(a, b));
    }
}

TEST_CASE("bitset basics") {
    Bitset b(130);
    CHECK(b.none());
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.to_indices() == std::vector<std::size_t>{0, 64, 129});
    CHECK(b.next(1) == 64);
    CHECK(b.next(130) == Bitset::npos);
    Bitset all(130, true);
    CHECK(all.count() == 130);
    all.and_not(b);
    CHECK(all.count() == 127);
    CHECK(!all.intersects(b));
    CHECK(all.and_count(Bitset(130, true)) == 127);
    b.reset(64);
    CHECK(b.count() == 2);
}

}  // TEST_SUITE
