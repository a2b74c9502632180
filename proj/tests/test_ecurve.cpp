#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "secant/construct.hpp"
#include "secant/ecurve.hpp"
#include "secant/spectrum.hpp"

using namespace secant;

namespace {

std::vector<std::uint32_t> primes_between(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = lo; p <= hi; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

bool nonsingular(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    return (4 * a * a % p * a + 27 * b * b) % p != 0;
}

// Counts (x, y) with y^2 = x^3 + a x + b, plus the point at infinity.
std::uint64_t enumerate_points(std::uint32_t p, std::uint64_t a, std::uint64_t b) {
    std::uint64_t n = 1;
    for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y) n += (y * y) % p == (x * x % p * x + a * x + b) % p;
    return n;
}

}  // namespace

TEST_CASE("curve_count examples") {
    const Curve c = curve_count(5, 0, 1);
    CHECK(c.count == 6);
    CHECK(c.trace == 0);
    CHECK_THROWS_WITH_AS((void)curve_count(5, 0, 0), "singular curve", std::invalid_argument);
    CHECK(curve_count(5, -1, 0).count == 8);
    CHECK_THROWS_AS((void)curve_count(9, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)curve_count(3, 1, 1), std::invalid_argument);
}

TEST_CASE("cubic_root_count examples") {
    CHECK(cubic_root_count(5, 1, 0) == 3);
    CHECK(cubic_root_count(5, 0, 2) == 1);
    CHECK(cubic_root_count(7, 0, 1) == 3);
    for (std::uint32_t p : primes_between(5, 31))
        for (std::int64_t m = 0; m < p; ++m)
            for (std::int64_t b = 0; b < p; ++b) CHECK(cubic_root_count(p, m, b) <= 3);
}

TEST_CASE("Hasse bound for every nonsingular curve, p <= 47") {
    for (std::uint32_t p : primes_between(5, 47))
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b) {
                if (!nonsingular(a, b, p)) {
                    CHECK_THROWS_AS((void)curve_count(p, a, b), std::invalid_argument);
                    continue;
                }
                const Curve c = curve_count(p, a, b);
                CHECK(static_cast<double>(std::llabs(c.trace)) <= 2 * std::sqrt(static_cast<double>(p)));
                CHECK(c.trace == static_cast<std::int64_t>(p) + 1 - static_cast<std::int64_t>(c.count));
            }
}

TEST_CASE("character sum count equals enumeration, p <= 31") {
    for (std::uint32_t p : primes_between(5, 31))
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b)
                if (nonsingular(a, b, p)) CHECK(curve_count(p, a, b).count == enumerate_points(p, a, b));
}

TEST_CASE("line-curve relation examples") {
    const ProjectivePlane pl = build_plane(make_field(5));
    const PointSet s = ec_region(pl);
    const LineCurveRelation r = line_curve_check(pl, s, 1, 0);
    CHECK(r.status == LineStatus::Checked);
    CHECK(r.secant == 5);
    CHECK(r.roots == 3);
    CHECK(r.curve_points == 8);
    CHECK(r.holds);

    const LineCurveRelation r2 = line_curve_check(pl, s, 0, 1);
    std::uint32_t expect = 0;
    for (std::int64_t x = 0; x < 5; ++x) expect += legendre_mod(x * x * x - 1, 5) >= 0;
    CHECK(r2.secant == expect);
    CHECK(r2.curve_points == enumerate_points(5, 0, 4));
    CHECK(r2.holds);

    CHECK(line_curve_check(pl, s, 3, 2).status == LineStatus::Singular);
    CHECK(line_curve_check(pl, s, 3, 3).status == LineStatus::Singular);
}

TEST_CASE("relation holds on every line, 5 < p <= 101") {
    for (std::uint32_t p : primes_between(7, 101)) {
        const ProjectivePlane pl = build_plane(make_field(p));
        const EcScanReport rep = ec_spectrum_scan(pl, 2);
        CHECK(rep.relation_violations == 0);
        CHECK(rep.lines_checked + rep.skipped_lines == static_cast<std::uint64_t>(p) * p + p);
        CHECK(rep.spectrum.set_size == p * (p + 1) / 2);
        CHECK(verify_counting_identities(rep.spectrum).ok());
        CHECK(rep.spectrum.mode_count >= lower_bound_ceiling(p));
    }
}

TEST_CASE("ec scan at p = 5") {
    const ProjectivePlane pl = build_plane(make_field(5));
    const EcScanReport rep = ec_spectrum_scan(pl);
    CHECK(rep.relation_violations == 0);
    // 25 non-vertical lines less the singular ones; the 5 vertical lines are skipped.
    std::uint64_t singular = 0;
    for (std::uint64_t m = 0; m < 5; ++m)
        for (std::uint64_t b = 0; b < 5; ++b) singular += !nonsingular((5 - m) % 5, (5 - b) % 5, 5);
    CHECK(rep.lines_checked == 25 - singular);
    CHECK(rep.skipped_lines == singular + 5);
    CHECK(rep.spectrum.set_size == 15);
    CHECK(verify_counting_identities(rep.spectrum).ok());
    CHECK(rep.mode_ratio_q32 == doctest::Approx(rep.spectrum.mode_count / std::pow(5.0, 1.5)));
}

TEST_CASE("ec scan is independent of the thread count") {
    const ProjectivePlane pl = build_plane(make_field(43));
    const EcScanReport a = ec_spectrum_scan(pl, 1), b = ec_spectrum_scan(pl, 4);
    CHECK(a.spectrum.histogram == b.spectrum.histogram);
    CHECK(a.lines_checked == b.lines_checked);
    CHECK(a.skipped_lines == b.skipped_lines);
}
