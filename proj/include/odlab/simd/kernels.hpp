#pragma once
// Word-level bitset kernels used by the combinatorial solvers.
//
// Every kernel exists as a scalar reference in namespace `scalar` and, on
// x86-64, as an AVX2 variant in namespace `avx2`. The free functions in
// `odlab::simd` dispatch once per process on the detected CPU features.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#if defined(__x86_64__) || defined(_M_X64)
#define ODLAB_SIMD_X86 1
#else
#define ODLAB_SIMD_X86 0
#endif

namespace odlab::simd {

using Word = std::uint64_t;

enum class Isa { scalar, avx2 };

namespace scalar {
// dst[i] &= src[i]
void and_into(std::span<Word> dst, std::span<const Word> src) noexcept;
// dst[i] &= ~src[i]
void andnot_into(std::span<Word> dst, std::span<const Word> src) noexcept;
// dst[i] = a[i] & b[i]
void and_to(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) noexcept;
std::size_t popcount(std::span<const Word> a) noexcept;
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept;
bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept;
bool any(std::span<const Word> a) noexcept;
}  // namespace scalar

#if ODLAB_SIMD_X86
namespace avx2 {
void and_into(std::span<Word> dst, std::span<const Word> src) noexcept;
void andnot_into(std::span<Word> dst, std::span<const Word> src) noexcept;
void and_to(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) noexcept;
std::size_t popcount(std::span<const Word> a) noexcept;
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept;
bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept;
bool any(std::span<const Word> a) noexcept;
}  // namespace avx2
#endif

// True when the running CPU supports the named ISA.
bool cpu_supports(Isa isa) noexcept;

// ISA picked by the dispatcher. Honors ODLAB_FORCE_SCALAR=1 in the environment.
Isa active_isa() noexcept;
std::string_view isa_name(Isa isa) noexcept;

void and_into(std::span<Word> dst, std::span<const Word> src) noexcept;
void andnot_into(std::span<Word> dst, std::span<const Word> src) noexcept;
void and_to(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) noexcept;
std::size_t popcount(std::span<const Word> a) noexcept;
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept;
bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept;
bool any(std::span<const Word> a) noexcept;

}  // namespace odlab::simd
