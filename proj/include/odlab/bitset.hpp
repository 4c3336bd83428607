#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "odlab/simd/kernels.hpp"

namespace odlab {

// Fixed-size dynamic bitset; bulk operations go through the SIMD dispatcher.
class Bitset {
public:
    using Word = simd::Word;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t nbits, bool value = false)
        : nbits_(nbits), words_((nbits + 63) / 64, value ? ~Word{0} : Word{0}) {
        trim();
    }

    std::size_t size() const noexcept { return nbits_; }
    std::size_t word_count() const noexcept { return words_.size(); }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= Word{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
    void set_all() noexcept {
        for (auto& w : words_) w = ~Word{0};
        trim();
    }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept { return simd::popcount(words_); }
    bool any() const noexcept { return simd::any(words_); }
    bool none() const noexcept { return !any(); }

    // First set bit at or after `from`, or npos.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= nbits_) return npos;
        std::size_t wi = from >> 6;
        Word w = words_[wi] & (~Word{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size()) return npos;
            w = words_[wi];
        }
    }
    std::size_t first() const noexcept { return next(0); }

    Bitset& operator&=(const Bitset& o) noexcept {
        simd::and_into(words_, o.words_);
        return *this;
    }
    Bitset& and_not(const Bitset& o) noexcept {
        simd::andnot_into(words_, o.words_);
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // *this = a & b without reallocating.
    void assign_and(const Bitset& a, const Bitset& b) noexcept { simd::and_to(words_, a.words_, b.words_); }

    bool intersects(const Bitset& o) const noexcept { return simd::intersects(words_, o.words_); }
    std::size_t and_count(const Bitset& o) const noexcept { return simd::and_popcount(words_, o.words_); }

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = first(); i != npos; i = next(i + 1)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim() noexcept {
        if (nbits_ % 64 != 0 && !words_.empty()) words_.back() &= (Word{1} << (nbits_ % 64)) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<Word> words_;
};

}  // namespace odlab
