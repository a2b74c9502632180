#pragma once

#include <cstdint>
#include <string>

#include "secant/plane.hpp"
#include "secant/point_set.hpp"
#include "secant/spectrum.hpp"

namespace secant {

/// y > alpha x^2 + beta x + gamma under the integer-lift order.
struct ParabolaParams {
    Elem alpha = 1;
    Elem beta = 0;
    Elem gamma = 0;
};

/// Parabola family thickness c = num/den in (0, 1); a = floor(c p).
struct FamilyParams {
    std::int64_t num = 1;
    std::int64_t den = 2;
};

std::uint32_t family_width(std::uint32_t p, const FamilyParams& c);

/// Each of the N points independently with probability `density`, drawn from
/// the counter-based SplitMix64 stream `seed` indexed by point.
PointSet random_set(const ProjectivePlane& plane, Rational density, std::uint64_t seed);

/// {(x, y) : lift(alpha x^2 + beta x + gamma) < lift(y)}; p > 3 prime, alpha != 0.
PointSet parabola_region(const ProjectivePlane& plane, const ParabolaParams& params);

/// {(x, x^2 + t) : x in F_p, 0 <= t < a}; p > 2 prime, 1 <= a <= p - 1.
PointSet parabola_family(const ProjectivePlane& plane, std::uint32_t a);
PointSet parabola_family(const ProjectivePlane& plane, const FamilyParams& c);

/// {(x, v) : x^3 - v is a square in F_p (zero included)}; p > 3 prime.
PointSet ec_region(const ProjectivePlane& plane);

/// Elements of the prime field from a rational like 1/4, reduced mod p.
Elem field_rational(const Field& f, std::int64_t num, std::int64_t den = 1);

}  // namespace secant
