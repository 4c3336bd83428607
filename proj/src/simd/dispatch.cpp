#include <cstdlib>
#include <cstring>

#include "odlab/simd/kernels.hpp"

namespace odlab::simd {
namespace {

struct KernelTable {
    Isa isa;
    void (*and_into)(std::span<Word>, std::span<const Word>) noexcept;
    void (*andnot_into)(std::span<Word>, std::span<const Word>) noexcept;
    void (*and_to)(std::span<Word>, std::span<const Word>, std::span<const Word>) noexcept;
    std::size_t (*popcount)(std::span<const Word>) noexcept;
    std::size_t (*and_popcount)(std::span<const Word>, std::span<const Word>) noexcept;
    bool (*intersects)(std::span<const Word>, std::span<const Word>) noexcept;
    bool (*any)(std::span<const Word>) noexcept;
};

constexpr KernelTable kScalar{Isa::scalar,          scalar::and_into,   scalar::andnot_into,
                              scalar::and_to,       scalar::popcount,   scalar::and_popcount,
                              scalar::intersects,   scalar::any};

#if ODLAB_SIMD_X86
constexpr KernelTable kAvx2{Isa::avx2,        avx2::and_into,   avx2::andnot_into, avx2::and_to,
                            avx2::popcount,   avx2::and_popcount, avx2::intersects, avx2::any};
#endif

const KernelTable& select() noexcept {
    const char* force = std::getenv("ODLAB_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "1") == 0) return kScalar;
#if ODLAB_SIMD_X86
    if (cpu_supports(Isa::avx2)) return kAvx2;
#endif
    return kScalar;
}

const KernelTable& table() noexcept {
    static const KernelTable& t = select();
    return t;
}

}  // namespace

bool cpu_supports(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if ODLAB_SIMD_X86 && (defined(__GNUC__) || defined(__clang__))
            __builtin_cpu_init();
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
            return false;
#endif
    }
    return false;
}

Isa active_isa() noexcept { return table().isa; }

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
    }
    return "unknown";
}

void and_into(std::span<Word> dst, std::span<const Word> src) noexcept { table().and_into(dst, src); }
void andnot_into(std::span<Word> dst, std::span<const Word> src) noexcept { table().andnot_into(dst, src); }
void and_to(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) noexcept {
    table().and_to(dst, a, b);
}
std::size_t popcount(std::span<const Word> a) noexcept { return table().popcount(a); }
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept {
    return table().and_popcount(a, b);
}
bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept { return table().intersects(a, b); }
bool any(std::span<const Word> a) noexcept { return table().any(a); }

}  // namespace odlab::simd
