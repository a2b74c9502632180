// Compiled with -mavx2; only reached through the dispatcher after a cpuid check.

#include <immintrin.h>

#include "secant/simd/kernels.hpp"

namespace secant::simd {

namespace {

inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i nibble = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, nibble);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), nibble);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

void and_popcount_rows(const std::uint64_t* rows, std::size_t words, std::size_t row_begin,
                       std::size_t row_end, const std::uint64_t* set, std::uint32_t* out) {
    const std::size_t vec_words = words & ~std::size_t{3};
    const __m256i zero = _mm256_setzero_si256();
    for (std::size_t r = row_begin; r < row_end; ++r) {
        const std::uint64_t* row = rows + r * words;
        __m256i acc = zero;
        std::size_t w = 0;
        for (; w < vec_words; w += 4) {
            const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + w));
            const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(set + w));
            acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(_mm256_and_si256(a, b)), zero));
        }
        std::uint64_t c = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                          static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                          static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                          static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
        for (; w < words; ++w) c += static_cast<std::uint64_t>(_mm_popcnt_u64(row[w] & set[w]));
        out[r - row_begin] = static_cast<std::uint32_t>(c);
    }
}

inline void add_widen(std::uint16_t* acc, const std::uint8_t* src, std::uint32_t n) {
    std::uint32_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m256i v = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
        __m256i* dst = reinterpret_cast<__m256i*>(acc + i);
        _mm256_storeu_si256(dst, _mm256_add_epi16(_mm256_loadu_si256(dst), v));
    }
    for (; i < n; ++i) acc[i] = static_cast<std::uint16_t>(acc[i] + src[i]);
}

void shift_accumulate(std::uint16_t* acc, const std::uint8_t* row, std::uint32_t len, std::uint32_t shift) {
    shift %= len;
    const std::uint32_t head = len - shift;
    add_widen(acc, row + shift, head);
    add_widen(acc + head, row, shift);
}

void mask_counts(const std::uint32_t* lines, std::uint32_t count, std::uint32_t mask, std::uint8_t* out) {
    const __m256i m = _mm256_set1_epi32(static_cast<int>(mask));
    const __m256i ones8 = _mm256_set1_epi8(1);
    const __m256i ones16 = _mm256_set1_epi16(1);
    alignas(32) std::uint32_t tmp[8];
    std::uint32_t l = 0;
    for (; l + 8 <= count; l += 8) {
        const __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(lines + l)), m);
        const __m256i per_lane = _mm256_madd_epi16(_mm256_maddubs_epi16(popcount_bytes(v), ones8), ones16);
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), per_lane);
        for (int j = 0; j < 8; ++j) out[l + j] = static_cast<std::uint8_t>(tmp[j]);
    }
    for (; l < count; ++l) out[l] = static_cast<std::uint8_t>(_mm_popcnt_u32(lines[l] & mask));
}

}  // namespace

namespace detail {
const Kernels avx2_kernels{&and_popcount_rows, &shift_accumulate, &mask_counts};
}

}  // namespace secant::simd
