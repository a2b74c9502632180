#include <bit>

#include "secant/simd/kernels.hpp"

namespace secant::simd {

namespace {

void and_popcount_rows(const std::uint64_t* rows, std::size_t words, std::size_t row_begin,
                       std::size_t row_end, const std::uint64_t* set, std::uint32_t* out) {
    for (std::size_t r = row_begin; r < row_end; ++r) {
        const std::uint64_t* row = rows + r * words;
        std::uint32_t c = 0;
        for (std::size_t w = 0; w < words; ++w) c += static_cast<std::uint32_t>(std::popcount(row[w] & set[w]));
        out[r - row_begin] = c;
    }
}

void shift_accumulate(std::uint16_t* acc, const std::uint8_t* row, std::uint32_t len, std::uint32_t shift) {
    shift %= len;
    const std::uint32_t head = len - shift;
    for (std::uint32_t b = 0; b < head; ++b) acc[b] = static_cast<std::uint16_t>(acc[b] + row[b + shift]);
    for (std::uint32_t b = head; b < len; ++b) acc[b] = static_cast<std::uint16_t>(acc[b] + row[b - head]);
}

void mask_counts(const std::uint32_t* lines, std::uint32_t count, std::uint32_t mask, std::uint8_t* out) {
    for (std::uint32_t l = 0; l < count; ++l) out[l] = static_cast<std::uint8_t>(std::popcount(lines[l] & mask));
}

}  // namespace

namespace detail {
const Kernels scalar_kernels{&and_popcount_rows, &shift_accumulate, &mask_counts};
}

}  // namespace secant::simd
