#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "secant/construct.hpp"
#include "secant/parallel.hpp"
#include "secant/spectrum.hpp"

using namespace secant;

namespace {

int chi(std::int64_t v, std::uint32_t p) {
    v %= p;
    if (v < 0) v += p;
    if (v == 0) return 0;
    for (std::int64_t y = 1; y < p; ++y)
        if (y * y % p == v) return 1;
    return -1;
}

}  // namespace

TEST_CASE("random_set") {
    const ProjectivePlane pl = build_plane(make_field(7));
    CHECK(random_set(pl, Rational{0, 1}, 3).size() == 0);
    CHECK(random_set(pl, Rational{1, 1}, 3).size() == pl.size());
    CHECK(random_set(pl, Rational{1, 2}, 3) == random_set(pl, Rational{1, 2}, 3));
    CHECK_FALSE(random_set(pl, Rational{1, 2}, 3) == random_set(pl, Rational{1, 2}, 4));
    CHECK_THROWS_AS((void)random_set(pl, Rational{3, 2}, 1), std::invalid_argument);
}

TEST_CASE("random_set concentration at q = 499") {
    const ProjectivePlane pl = build_plane(make_field(499));
    const double n = pl.size();
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const PointSet s = random_set(pl, Rational{1, 2}, seed);
        CHECK(std::abs(s.size() - n / 2) <= 4 * std::sqrt(n / 4));
    }
}

TEST_CASE("random_set includes points on the infinite line") {
    const ProjectivePlane pl = build_plane(make_field(5));
    const AffineFrame fr(pl);
    bool any = false;
    for (std::uint64_t seed = 0; seed < 10 && !any; ++seed) {
        const PointSet s = random_set(pl, Rational{1, 2}, seed);
        for (PointIndex p : pl.line_points(fr.infinity())) any = any || s.contains(p);
    }
    CHECK(any);
}

TEST_CASE("parabola_region examples") {
    const ProjectivePlane p5 = build_plane(make_field(5));
    const AffineFrame f5(p5);
    const PointSet s5 = parabola_region(p5, {1, 0, 0});
    CHECK(s5.size() == 10);
    CHECK(s5.contains(f5.point(1, 2)));
    CHECK_FALSE(s5.contains(f5.point(2, 1)));

    const ProjectivePlane p7 = build_plane(make_field(7));
    CHECK(parabola_region(p7, {1, 0, 0}).size() == 28);

    CHECK_THROWS_AS((void)parabola_region(p5, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)parabola_region(build_plane(make_field(3)), {1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)parabola_region(build_plane(make_field(9)), {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("parabola_region rows are lift intervals") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 29u}) {
        const Field f = make_field(p);
        const ProjectivePlane pl = build_plane(f);
        const AffineFrame fr(pl);
        const ParabolaParams pp{field_rational(f, 1, 4), 1, 1};
        const PointSet s = parabola_region(pl, pp);
        std::uint32_t expect = 0;
        for (Elem x = 0; x < p; ++x) {
            const Elem fx = f.add(f.add(f.mul(pp.alpha, f.mul(x, x)), f.mul(pp.beta, x)), pp.gamma);
            expect += p - 1 - f.lift(fx);
            for (Elem y = 0; y < p; ++y) CHECK(s.contains(fr.point(x, y)) == (y > fx));
        }
        CHECK(s.size() == expect);
        for (PointIndex q : pl.line_points(fr.infinity())) CHECK_FALSE(s.contains(q));
    }
}

TEST_CASE("parabola_family") {
    const ProjectivePlane p7 = build_plane(make_field(7));
    const AffineFrame f7(p7);
    CHECK(family_width(7, {3, 10}) == 2);
    const PointSet s7 = parabola_family(p7, FamilyParams{3, 10});
    CHECK(s7.size() == 14);
    CHECK(s7.contains(f7.point(3, 3)));
    CHECK(parabola_family(build_plane(make_field(11)), FamilyParams{1, 2}).size() == 55);
    CHECK_THROWS_AS((void)parabola_family(p7, 0u), std::invalid_argument);
    CHECK_THROWS_AS((void)parabola_family(p7, 7u), std::invalid_argument);
    CHECK_THROWS_AS((void)parabola_family(p7, FamilyParams{1, 10}), std::invalid_argument);  // a = 0
    CHECK_THROWS_AS((void)parabola_family(p7, FamilyParams{1, 1}), std::invalid_argument);
}

TEST_CASE("parabola_family line counts match the character sum") {
    for (std::uint32_t p : {7u, 11u, 13u, 23u}) {
        const Field f = make_field(p);
        const ProjectivePlane pl = build_plane(f);
        const AffineFrame fr(pl);
        for (FamilyParams c : {FamilyParams{1, 4}, FamilyParams{1, 2}}) {
            const std::uint32_t a = family_width(p, c);
            const PointSet s = parabola_family(pl, c);
            const auto n = secant_sizes(pl, s);
            for (Elem x = 0; x < p; ++x) CHECK(n[fr.vertical(x)] == a);
            for (Elem m = 0; m < p; ++m)
                for (Elem b = 0; b < p; ++b) {
                    std::int64_t expect = a;
                    for (std::uint32_t t = 0; t < a; ++t)
                        expect += chi(static_cast<std::int64_t>(m) * m + 4 * b - 4 * t, p);
                    CHECK(n[fr.line(m, b)] == expect);
                }
        }
    }
}

TEST_CASE("ec_region") {
    const ProjectivePlane p5 = build_plane(make_field(5));
    const AffineFrame f5(p5);
    const PointSet s = ec_region(p5);
    CHECK(s.size() == 15);
    CHECK(s.contains(f5.point(1, 2)));
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 101u}) {
        const ProjectivePlane pl = build_plane(make_field(p));
        const AffineFrame fr(pl);
        const PointSet e = ec_region(pl);
        CHECK(e.size() == p * (p + 1) / 2);
        CHECK(e.contains(fr.point(0, 0)));
        for (Elem x = 0; x < p; ++x) {
            std::uint32_t row = 0;
            for (Elem v = 0; v < p; ++v) {
                const bool in = e.contains(fr.point(x, v));
                row += in;
                const std::int64_t xv = static_cast<std::int64_t>(x) * x % p * x % p - v;
                CHECK(in == (chi(xv, p) >= 0));
            }
            CHECK(row == (p + 1) / 2);
        }
    }
    CHECK_THROWS_AS((void)ec_region(build_plane(make_field(3))), std::invalid_argument);
    CHECK_THROWS_AS((void)ec_region(build_plane(make_field(25))), std::invalid_argument);
}

TEST_CASE("field_rational") {
    const Field f = make_field(11);
    CHECK(field_rational(f, 1, 4) == 3);  // 4 * 3 = 12
    CHECK(field_rational(f, -1) == 10);
    CHECK_THROWS_AS((void)field_rational(f, 1, 11), std::invalid_argument);
}

TEST_CASE("constructions satisfy the identities and the lower bound") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 53u, 101u}) {
        const Field f = make_field(p);
        const ProjectivePlane pl = build_plane(f);
        for (const PointSet& s : {parabola_region(pl, {field_rational(f, 1, 4), 1, 1}), parabola_region(pl, {2, 3, 1}),
                                  parabola_family(pl, FamilyParams{1, 2}), ec_region(pl)}) {
            const SecantSpectrum sp = compute_spectrum(pl, s);
            CHECK(verify_counting_identities(sp).ok());
            CHECK(sp.mode_count >= lower_bound_ceiling(p));
        }
    }
}
