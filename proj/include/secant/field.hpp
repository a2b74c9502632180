#pragma once

#include <cstdint>
#include <vector>

namespace secant {

/// Field element, encoded as an integer in [0, q-1]. For q = p^k the base-p
/// digits are the polynomial coefficients, lowest degree in the lowest digit.
using Elem = std::uint32_t;

/// Finite field GF(p^k).
///
/// Immutable after construction. Prime fields use plain modular arithmetic;
/// extension fields use log/antilog tables built from the lexicographically
/// smallest monic irreducible modulus, so every build yields the same
/// encoding.
class Field {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 20;
    static constexpr std::uint32_t kLegendreTableLimit = 1u << 16;

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    bool is_prime() const noexcept { return k_ == 1; }

    /// Coefficients c_0..c_k of the modulus (c_k = 1). For prime fields: {0, 1}.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;  // throws std::domain_error on 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const noexcept;

    /// Generator of the multiplicative group.
    Elem primitive() const noexcept { return primitive_; }

    /// Legendre symbol; only for odd prime fields.
    int legendre(Elem x) const;

    /// Integer representative in [0, p-1]; only for prime fields.
    std::uint32_t lift(Elem x) const;

private:
    friend Field make_field(std::uint32_t q);
    Field() = default;

    Elem poly_mul_slow(Elem a, Elem b) const;

    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> inverse_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
    std::vector<std::int8_t> chi_;
    Elem primitive_ = 0;
};

/// Builds GF(q). Throws std::invalid_argument("not a prime power") when q is not.
Field make_field(std::uint32_t q);

/// Prime-power decomposition q = p^k, or {0, 0} when q is not a prime power.
struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
};
PrimePower factor_prime_power(std::uint32_t q) noexcept;

bool is_prime(std::uint64_t n) noexcept;

/// Legendre symbol of v modulo an odd prime p via Euler's criterion.
int legendre_mod(std::int64_t v, std::uint32_t p) noexcept;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept;

namespace poly {

/// Polynomials over GF(p), coefficients low degree first, no trailing zeros
/// except for the zero polynomial which is empty.
using Poly = std::vector<std::uint32_t>;

Poly mod(Poly a, const Poly& m, std::uint32_t p);
bool is_irreducible(const Poly& f, std::uint32_t p);

}  // namespace poly

}  // namespace secant
