#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "secant/field.hpp"
#include "secant/rng.hpp"

using namespace secant;

namespace {

// Brute-force Legendre symbol: is x a square among {y^2}?
int chi_oracle(std::uint32_t x, std::uint32_t p) {
    x %= p;
    if (x == 0) return 0;
    for (std::uint32_t y = 1; y < p; ++y)
        if (y * y % p == x) return 1;
    return -1;
}

std::vector<std::uint32_t> odd_primes_upto(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 3; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("make_field examples") {
    const Field f7 = make_field(7);
    CHECK(f7.p() == 7);
    CHECK(f7.k() == 1);
    CHECK(f7.is_prime());

    const Field f9 = make_field(9);
    CHECK(f9.p() == 3);
    CHECK(f9.k() == 2);
    CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1

    CHECK(make_field(8).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});  // x^3 + x^2 + 1

    for (std::uint32_t bad : {0u, 1u, 6u, 12u, 100u}) {
        try {
            (void)make_field(bad);
            FAIL("expected an error for q=" << bad);
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()) == "not a prime power");
        }
    }
}

TEST_CASE("modulus is the smallest monic irreducible") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 121u, 125u}) {
        const Field f = make_field(q);
        const auto& m = f.modulus();
        REQUIRE(m.size() == f.k() + 1);
        CHECK(m.back() == 1);
        CHECK(poly::is_irreducible(m, f.p()));
        // Every monic polynomial of the same degree that precedes it, reading
        // coefficients from low degree up, must be reducible.
        const std::uint32_t k = f.k(), p = f.p();
        std::uint32_t code = 0;
        for (std::uint32_t i = k; i-- > 0;) code = code * p + m[i];
        // Lexicographic low-degree-first equals numeric order with c0 most significant.
        std::uint32_t lex = 0;
        for (std::uint32_t i = 0; i < k; ++i) lex = lex * p + m[i];
        for (std::uint32_t other = 0; other < lex; ++other) {
            poly::Poly g(k + 1, 0);
            std::uint32_t v = other;
            for (std::uint32_t i = k; i-- > 0;) {
                g[i] = v % p;
                v /= p;
            }
            g[k] = 1;
            CHECK_FALSE(poly::is_irreducible(g, p));
        }
        (void)code;
    }
}

TEST_CASE("irreducibility oracle agrees with root and factor search") {
    // Degree 2 and 3: irreducible iff no root.
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (std::uint32_t deg : {2u, 3u}) {
            std::uint32_t total = 1;
            for (std::uint32_t i = 0; i < deg; ++i) total *= p;
            for (std::uint32_t c = 0; c < total; ++c) {
                poly::Poly g(deg + 1);
                std::uint32_t v = c;
                for (std::uint32_t i = 0; i < deg; ++i) {
                    g[i] = v % p;
                    v /= p;
                }
                g[deg] = 1;
                bool has_root = false;
                for (std::uint32_t x = 0; x < p && !has_root; ++x) {
                    std::uint64_t acc = 0;
                    for (std::uint32_t i = deg + 1; i-- > 0;) acc = (acc * x + g[i]) % p;
                    has_root = acc == 0;
                }
                CHECK(poly::is_irreducible(g, p) == !has_root);
            }
        }
    }
}

TEST_CASE("legendre and lift examples") {
    const Field f7 = make_field(7), f5 = make_field(5), f11 = make_field(11);
    CHECK(f7.legendre(3) == -1);
    CHECK(f7.legendre(0) == 0);
    CHECK(f5.legendre(4) == 1);
    CHECK(f5.lift(f5.add(3, 4)) == 2);
    CHECK(f7.lift(0) == 0);
    CHECK(f11.lift(f11.inv(3)) == 4);

    CHECK_THROWS_WITH_AS((void)make_field(9).legendre(1), "Legendre requires odd prime field", std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)make_field(2).legendre(1), "Legendre requires odd prime field", std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)make_field(4).lift(1), "order defined only on prime fields", std::invalid_argument);
    CHECK_THROWS_AS((void)f7.inv(0), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 101u, 121u, 125u, 243u, 256u, 499u, 65537u}) {
        const Field f = make_field(q);
        SplitMix64 rng(q);
        for (int i = 0; i < 10000; ++i) {
            const Elem a = static_cast<Elem>(rng.below(q));
            const Elem b = static_cast<Elem>(rng.below(q));
            const Elem c = static_cast<Elem>(rng.below(q));
            REQUIRE(f.add(a, b) < q);
            REQUIRE(f.mul(a, b) < q);
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("prime field arithmetic matches integers") {
    for (std::uint32_t p : {2u, 3u, 13u, 101u, 65521u}) {
        const Field f = make_field(p);
        SplitMix64 rng(p * 7);
        for (int i = 0; i < 2000; ++i) {
            const auto a = rng.below(p), b = rng.below(p);
            CHECK(f.add(a, b) == (a + b) % p);
            CHECK(f.mul(a, b) == (a * b) % p);
            CHECK(f.from_int(-static_cast<std::int64_t>(a)) == (p - a) % p);
        }
    }
}

TEST_CASE("legendre symbol against brute force, multiplicativity and zero sum") {
    for (std::uint32_t p : odd_primes_upto(101)) {
        const Field f = make_field(p);
        int sum = 0;
        for (std::uint32_t x = 0; x < p; ++x) {
            CHECK(f.legendre(x) == chi_oracle(x, p));
            CHECK(legendre_mod(x, p) == chi_oracle(x, p));
            sum += f.legendre(x);
        }
        CHECK(sum == 0);
        for (std::uint32_t a = 1; a < p; ++a)
            for (std::uint32_t b = 1; b < p; ++b) CHECK(f.legendre(f.mul(a, b)) == f.legendre(a) * f.legendre(b));
    }
}

TEST_CASE("legendre above the table threshold uses Euler's criterion") {
    const std::uint32_t p = 65537;
    const Field f = make_field(p);
    SplitMix64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto x = static_cast<Elem>(rng.below(p));
        const int expect = x == 0 ? 0 : (pow_mod(x, (p - 1) / 2, p) == 1 ? 1 : -1);
        CHECK(f.legendre(x) == expect);
        CHECK(f.legendre(f.mul(x, x)) == (x == 0 ? 0 : 1));
    }
}

TEST_CASE("multiplicative group is cyclic") {
    for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 97u, 125u, 128u}) {
        const Field f = make_field(q);
        const Elem g = f.primitive();
        std::vector<bool> seen(q, false);
        Elem x = 1;
        std::uint32_t order = 0;
        do {
            REQUIRE_FALSE(seen[x]);
            seen[x] = true;
            x = f.mul(x, g);
            ++order;
        } while (x != 1);
        CHECK(order == q - 1);
    }
}

TEST_CASE("extension field multiplication matches polynomial arithmetic") {
    // GF(9) = F_3[x]/(x^2+1): encode a0 + a1*x as a0 + 3*a1.
    const Field f = make_field(9);
    for (Elem a = 0; a < 9; ++a)
        for (Elem b = 0; b < 9; ++b) {
            const int a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
            // (a0 + a1 x)(b0 + b1 x) = a0b0 - a1b1 + (a0b1 + a1b0) x
            const int c0 = ((a0 * b0 - a1 * b1) % 3 + 3) % 3;
            const int c1 = (a0 * b1 + a1 * b0) % 3;
            CHECK(f.mul(a, b) == static_cast<Elem>(c0 + 3 * c1));
            CHECK(f.add(a, b) == static_cast<Elem>((a0 + b0) % 3 + 3 * ((a1 + b1) % 3)));
        }
}

TEST_CASE("factor_prime_power") {
    CHECK(factor_prime_power(2).p == 2);
    CHECK(factor_prime_power(243).p == 3);
    CHECK(factor_prime_power(243).k == 5);
    CHECK(factor_prime_power(1).p == 0);
    CHECK(factor_prime_power(36).p == 0);
}
