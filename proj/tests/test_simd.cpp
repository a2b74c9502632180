#include "doctest.h"

#include <bit>
#include <vector>

#include "secant/rng.hpp"
#include "secant/simd/kernels.hpp"

using namespace secant;
using simd::Isa;

TEST_CASE("dispatch") {
    const Isa before = simd::active_isa();
    simd::set_isa(Isa::Scalar);
    CHECK(simd::active_isa() == Isa::Scalar);
    simd::set_isa(Isa::Avx2);
    CHECK(simd::active_isa() == simd::detected_isa());
    simd::set_isa(before);
    CHECK(simd::isa_name(Isa::Scalar) == "scalar");
    CHECK(simd::isa_name(Isa::Avx2) == "avx2");
}

TEST_CASE("and_popcount_rows") {
    SplitMix64 rng(11);
    for (std::size_t words : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 33u, 157u}) {
        const std::size_t rows = 13;
        std::vector<std::uint64_t> m(rows * words), set(words);
        for (auto& w : m) w = rng.next();
        for (auto& w : set) w = rng.next();
        std::vector<std::uint32_t> expect(rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t w = 0; w < words; ++w) expect[r] += std::popcount(m[r * words + w] & set[w]);
        for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
            std::vector<std::uint32_t> out(rows - 3, 0xdead);
            simd::kernels(isa).and_popcount_rows(m.data(), words, 2, rows - 1, set.data(), out.data() );
            for (std::size_t r = 2; r < rows - 1; ++r) CHECK(out[r - 2] == expect[r]);
        }
    }
}

TEST_CASE("shift_accumulate") {
    SplitMix64 rng(12);
    for (std::uint32_t len : {1u, 2u, 5u, 15u, 16u, 17u, 31u, 32u, 33u, 101u, 499u, 1999u}) {
        std::vector<std::uint8_t> row(len);
        for (auto& v : row) v = static_cast<std::uint8_t>(rng.below(2));
        for (std::uint32_t shift : {0u, 1u, len / 2, len - 1}) {
            std::vector<std::uint16_t> base(len);
            for (auto& v : base) v = static_cast<std::uint16_t>(rng.below(1000));
            std::vector<std::uint16_t> expect = base;
            for (std::uint32_t b = 0; b < len; ++b) expect[b] += row[(b + shift) % len];
            for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
                std::vector<std::uint16_t> acc = base;
                simd::kernels(isa).shift_accumulate(acc.data(), row.data(), len, shift);
                CHECK(acc == expect);
            }
        }
    }
}

TEST_CASE("mask_counts") {
    SplitMix64 rng(13);
    for (std::uint32_t count : {1u, 7u, 8u, 9u, 13u, 16u, 21u, 32u}) {
        std::vector<std::uint32_t> lines(count);
        for (auto& l : lines) l = static_cast<std::uint32_t>(rng.next());
        for (int rep = 0; rep < 50; ++rep) {
            const auto mask = static_cast<std::uint32_t>(rng.next());
            for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
                std::vector<std::uint8_t> out(count, 0xff);
                simd::kernels(isa).mask_counts(lines.data(), count, mask, out.data());
                for (std::uint32_t l = 0; l < count; ++l) CHECK(out[l] == std::popcount(lines[l] & mask));
            }
        }
    }
}

TEST_CASE("counter generator") {
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(counter_draw(5, 3) == splitmix64(splitmix64(5) + 3));
    CHECK(bernoulli(0, 1, 2));
    CHECK_FALSE(bernoulli(~0ULL, 1, 2));
    CHECK_FALSE(bernoulli(0, 0, 1));
    CHECK(bernoulli(~0ULL, 1, 1));
    SplitMix64 a(7), b(7);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    for (int i = 0; i < 1000; ++i) CHECK(a.below(7) < 7);
}
