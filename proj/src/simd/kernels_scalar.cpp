#include "odlab/simd/kernels.hpp"

#include <bit>

namespace odlab::simd::scalar {

void and_into(std::span<Word> dst, std::span<const Word> src) noexcept {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_into(std::span<Word> dst, std::span<const Word> src) noexcept {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= ~src[i];
}

void and_to(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) noexcept {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

std::size_t popcount(std::span<const Word> a) noexcept {
    std::size_t total = 0;
    for (Word w : a) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept {
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool any(std::span<const Word> a) noexcept {
    for (Word w : a)
        if (w) return true;
    return false;
}

}  // namespace odlab::simd::scalar
