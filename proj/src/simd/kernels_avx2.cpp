#include "odlab/simd/kernels.hpp"

#if ODLAB_SIMD_X86

#include <immintrin.h>

#include <bit>

#define ODLAB_AVX2 __attribute__((target("avx2,popcnt")))

namespace odlab::simd::avx2 {
namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per __m256i

ODLAB_AVX2 inline __m256i load(const Word* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

ODLAB_AVX2 inline void store(Word* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Nibble-table popcount (Mula), per-64-bit-lane sums via SAD.
ODLAB_AVX2 inline __m256i popcount_lanes(__m256i v) {
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                           0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

ODLAB_AVX2 inline std::size_t horizontal_sum(__m256i acc) {
    alignas(32) Word lanes[kLanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

}  // namespace

ODLAB_AVX2 void and_into(std::span<Word> dst, std::span<const Word> src) noexcept {
    std::size_t i = 0;
    const std::size_t n = dst.size();
    for (; i + kLanes <= n; i += kLanes) store(dst.data() + i, _mm256_and_si256(load(dst.data() + i), load(src.data() + i)));
    for (; i < n; ++i) dst[i] &= src[i];
}

ODLAB_AVX2 void andnot_into(std::span<Word> dst, std::span<const Word> src) noexcept {
    std::size_t i = 0;
    const std::size_t n = dst.size();
    // _mm256_andnot_si256(a, b) computes ~a & b
    for (; i + kLanes <= n; i += kLanes)
        store(dst.data() + i, _mm256_andnot_si256(load(src.data() + i), load(dst.data() + i)));
    for (; i < n; ++i) dst[i] &= ~src[i];
}

ODLAB_AVX2 void and_to(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) noexcept {
    std::size_t i = 0;
    const std::size_t n = dst.size();
    for (; i + kLanes <= n; i += kLanes) store(dst.data() + i, _mm256_and_si256(load(a.data() + i), load(b.data() + i)));
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

ODLAB_AVX2 std::size_t popcount(std::span<const Word> a) noexcept {
    std::size_t i = 0;
    const std::size_t n = a.size();
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes) acc = _mm256_add_epi64(acc, popcount_lanes(load(a.data() + i)));
    std::size_t total = horizontal_sum(acc);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

ODLAB_AVX2 std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept {
    std::size_t i = 0;
    const std::size_t n = a.size();
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes)
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a.data() + i), load(b.data() + i))));
    std::size_t total = horizontal_sum(acc);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

ODLAB_AVX2 bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept {
    std::size_t i = 0;
    const std::size_t n = a.size();
    for (; i + kLanes <= n; i += kLanes) {
        __m256i v = _mm256_and_si256(load(a.data() + i), load(b.data() + i));
        if (!_mm256_testz_si256(v, v)) return true;
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

ODLAB_AVX2 bool any(std::span<const Word> a) noexcept {
    std::size_t i = 0;
    const std::size_t n = a.size();
    for (; i + kLanes <= n; i += kLanes) {
        __m256i v = load(a.data() + i);
        if (!_mm256_testz_si256(v, v)) return true;
    }
    for (; i < n; ++i)
        if (a[i]) return true;
    return false;
}

}  // namespace odlab::simd::avx2

#endif
