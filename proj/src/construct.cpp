#include "secant/construct.hpp"

#include <stdexcept>

#include "secant/rng.hpp"

namespace secant {

namespace {

void require_prime_plane(const ProjectivePlane& plane, std::uint32_t min_p, const char* what) {
    const Field& f = plane.field();
    if (!f.is_prime() || f.p() <= min_p)
        throw std::invalid_argument(std::string("parameter error: ") + what + " needs a prime p > " +
                                    std::to_string(min_p));
}

}  // namespace

std::uint32_t family_width(std::uint32_t p, const FamilyParams& c) {
    if (c.den <= 0 || c.num <= 0 || c.num >= c.den) throw std::invalid_argument("parameter error: c must lie in (0, 1)");
    return static_cast<std::uint32_t>(static_cast<std::int64_t>(p) * c.num / c.den);
}

Elem field_rational(const Field& f, std::int64_t num, std::int64_t den) {
    const Elem d = f.from_int(den);
    if (d == 0) throw std::invalid_argument("parameter error: denominator vanishes in the field");
    return f.div(f.from_int(num), d);
}

PointSet random_set(const ProjectivePlane& plane, Rational density, std::uint64_t seed) {
    if (density.num < 0 || density.num > density.den) throw std::invalid_argument("parameter error: density outside [0, 1]");
    PointSet s(plane);
    const auto num = static_cast<std::uint64_t>(density.num);
    const auto den = static_cast<std::uint64_t>(density.den);
    for (PointIndex i = 0; i < plane.size(); ++i)
        if (bernoulli(counter_draw(seed, i), num, den)) s.insert(i);
    return s;
}

PointSet parabola_region(const ProjectivePlane& plane, const ParabolaParams& params) {
    require_prime_plane(plane, 3, "parabola region");
    const Field& f = plane.field();
    if (params.alpha % f.p() == 0) throw std::invalid_argument("parameter error: alpha must be nonzero");
    const ParabolaParams pp{params.alpha % f.p(), params.beta % f.p(), params.gamma % f.p()};
    const AffineFrame frame(plane);
    PointSet s(plane);
    for (Elem x = 0; x < f.q(); ++x) {
        const Elem fx = f.add(f.add(f.mul(pp.alpha, f.mul(x, x)), f.mul(pp.beta, x)), pp.gamma);
        for (Elem y = f.lift(fx) + 1; y < f.q(); ++y) s.insert(frame.point(x, y));
    }
    return s;
}

PointSet parabola_family(const ProjectivePlane& plane, std::uint32_t a) {
    require_prime_plane(plane, 2, "parabola family");
    const Field& f = plane.field();
    if (a < 1 || a > f.p() - 1) throw std::invalid_argument("parameter error: a must lie in [1, p-1]");
    const AffineFrame frame(plane);
    PointSet s(plane);
    for (Elem x = 0; x < f.q(); ++x) {
        const Elem x2 = f.mul(x, x);
        for (Elem t = 0; t < a; ++t) s.insert(frame.point(x, f.add(x2, t)));
    }
    return s;
}

PointSet parabola_family(const ProjectivePlane& plane, const FamilyParams& c) {
    require_prime_plane(plane, 2, "parabola family");
    return parabola_family(plane, family_width(plane.q(), c));
}

PointSet ec_region(const ProjectivePlane& plane) {
    require_prime_plane(plane, 3, "elliptic-curve region");
    const Field& f = plane.field();
    const AffineFrame frame(plane);
    PointSet s(plane);
    for (Elem x = 0; x < f.q(); ++x) {
        const Elem x3 = f.mul(x, f.mul(x, x));
        for (Elem v = 0; v < f.q(); ++v)
            if (f.legendre(f.sub(x3, v)) >= 0) s.insert(frame.point(x, v));
    }
    return s;
}

}  // namespace secant
