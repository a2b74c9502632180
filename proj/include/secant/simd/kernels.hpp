#pragma once

// Data-parallel inner loops behind the spectrum, search and projection code.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant compiled in its own translation unit. The variant is picked at
// runtime from cpuid; SECANT_SIMD=scalar in the environment or set_isa()
// forces the reference path. Both paths must produce identical integers.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace secant::simd {

enum class Isa { Scalar, Avx2 };

struct Kernels {
    /// out[r - row_begin] = popcount(rows[r] & set) for r in [row_begin, row_end),
    /// rows stored back to back with `words` 64-bit words each.
    void (*and_popcount_rows)(const std::uint64_t* rows, std::size_t words, std::size_t row_begin,
                              std::size_t row_end, const std::uint64_t* set, std::uint32_t* out);

    /// acc[b] += row[(b + shift) mod len] for every b in [0, len).
    void (*shift_accumulate)(std::uint16_t* acc, const std::uint8_t* row, std::uint32_t len,
                             std::uint32_t shift);

    /// out[l] = popcount(lines[l] & mask) for l in [0, count); count <= 32.
    void (*mask_counts)(const std::uint32_t* lines, std::uint32_t count, std::uint32_t mask,
                        std::uint8_t* out);
};

Isa detected_isa() noexcept;
Isa active_isa() noexcept;
/// Selects an ISA; requests above what the CPU supports fall back to detected_isa().
void set_isa(Isa isa) noexcept;
std::string_view isa_name(Isa isa) noexcept;

const Kernels& kernels(Isa isa) noexcept;
inline const Kernels& kernels() noexcept { return kernels(active_isa()); }

namespace detail {
extern const Kernels scalar_kernels;
#if defined(SECANT_HAVE_AVX2_TU)
extern const Kernels avx2_kernels;
#endif
}  // namespace detail

}  // namespace secant::simd
