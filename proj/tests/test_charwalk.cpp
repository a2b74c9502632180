#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "secant/charwalk.hpp"
#include "secant/construct.hpp"
#include "secant/spectrum.hpp"

using namespace secant;

namespace {

// pr_d(b) by scanning the region's membership on each line point.
std::vector<std::uint32_t> direct_profile(const ProjectivePlane& pl, const PointSet& s, Elem d) {
    const Field& f = pl.field();
    const AffineFrame fr(pl);
    std::vector<std::uint32_t> pr(f.p(), 0);
    for (Elem b = 0; b < f.p(); ++b)
        for (Elem x = 0; x < f.p(); ++x) pr[b] += s.contains(fr.point(x, f.add(f.mul(d, x), b)));
    return pr;
}

std::vector<std::uint32_t> primes_between(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = lo; p <= hi; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("psi walk examples") {
    CHECK(psi_walk(7, 0).values == std::vector<std::int32_t>{0, 1, 2, 1, 2, 1, 0});
    CHECK(psi_walk(5, 0).values == std::vector<std::int32_t>{0, 1, 0, -1, 0});
    for (std::uint32_t p : primes_between(3, 200))
        for (Elem a = 0; a < p; a += 1 + p / 7) {
            const Walk w = psi_walk(p, a);
            REQUIRE(w.values.size() == p);
            CHECK(w.values.back() == 0);
            int zero_steps = 0;
            std::int32_t prev = 0;
            for (std::int32_t v : w.values) {
                CHECK(std::abs(v - prev) <= 1);
                zero_steps += v == prev;
                prev = v;
            }
            CHECK(zero_steps == 1);
        }
    CHECK_THROWS_AS((void)psi_walk(9, 0), std::invalid_argument);
}

TEST_CASE("phi sum examples") {
    CHECK(phi_sum(7, 3, 2) == 0);
    CHECK(phi_sum(7, 3, 0) == 0);
    CHECK(phi_sum(5, 1, 1) == 1);
    for (std::uint32_t a = 0; a <= 11; ++a) CHECK(std::abs(phi_sum(11, 4, a)) <= a);
    CHECK(phi_sum(11, 4, 11) == 0);
    CHECK_THROWS_AS((void)phi_sum(7, 0, 8), std::invalid_argument);
}

TEST_CASE("level stats examples") {
    const LevelStats s7 = level_stats(psi_walk(7, 0));
    CHECK(s7.zero_count == 2);
    CHECK(s7.max_level_count == 3);
    CHECK(s7.max_level == 1);
    const LevelStats s5 = level_stats(psi_walk(5, 0));
    CHECK(s5.zero_count == 3);
    CHECK(s5.max_level_count == 3);
    CHECK(s5.max_level == 0);
    for (std::uint32_t p : primes_between(3, 300)) {
        const Walk w = psi_walk(p, 1);
        const LevelStats st = level_stats(w);
        std::uint32_t total = 0;
        std::int32_t maxabs = 0;
        for (const auto& [lvl, c] : st.counts) total += c;
        for (auto v : w.values) maxabs = std::max(maxabs, std::abs(v));
        CHECK(total == p);
        CHECK(st.range <= 2 * maxabs);
    }
}

TEST_CASE("projection profile example") {
    const ProjectivePlane pl = build_plane(make_field(5));
    const ProjectionProfile prof = projection_profile(pl, {4, 1, 1}, 1);
    CHECK(prof.pr == std::vector<std::uint32_t>{1, 2, 2, 3, 2});
    std::uint32_t sum = 0;
    for (auto v : prof.pr) sum += v;
    CHECK(sum == 10);
    CHECK(parabola_region(pl, {4, 1, 1}).size() == 10);
    CHECK_THROWS_WITH_AS((void)projection_profile(pl, {4, 1, 1}, 0), "horizontal slope excluded",
                         std::invalid_argument);

    const LawReport rep = verify_projection_laws(pl, {4, 1, 1});
    CHECK(rep.range == 2);
    CHECK(rep.range_lower == doctest::Approx(std::sqrt(5.0) / (2 * M_PI)));
    CHECK(rep.range_upper == doctest::Approx(std::sqrt(5.0) * std::log(5.0)));
    CHECK(rep.all_pass());
}

TEST_CASE("incremental profile equals direct count") {
    for (std::uint32_t p : primes_between(5, 60)) {
        const Field f = make_field(p);
        const ProjectivePlane pl = build_plane(f);
        for (ParabolaParams pp : {ParabolaParams{1, 0, 0}, ParabolaParams{field_rational(f, 1, 4), 1, 1},
                                  ParabolaParams{2, 3, 1}, ParabolaParams{p - 1, 2, p - 1}}) {
            const PointSet s = parabola_region(pl, pp);
            for (Elem d = 1; d < p; ++d) {
                const auto pr = projection_profile(f, pp, d).pr;
                CHECK(pr == direct_profile(pl, s, d));
                std::uint32_t sum = 0;
                for (auto v : pr) sum += v;
                CHECK(sum == s.size());
            }
        }
    }
}

TEST_CASE("difference law example and displayed form") {
    const Field f = make_field(5);
    const auto pr = projection_profile(f, {4, 1, 1}, 1).pr;
    const int expect[5] = {1, 0, 1, -1, -1};
    for (Elem b = 0; b < 5; ++b) {
        CHECK(static_cast<int>(pr[(b + 1) % 5]) - static_cast<int>(pr[b]) == expect[b]);
        CHECK(f.legendre(f.sub(b, 1)) == expect[b]);
    }
    const LawReport rep = verify_projection_laws(f, {4, 1, 1});
    CHECK(rep.difference.pass);
    // The d-free displayed identity does not match every step.
    CHECK(rep.displayed_form_matches < 5);
}

TEST_CASE("factorization example") {
    const ProjectivePlane pl = build_plane(make_field(5));
    const auto pr = projection_profile(pl, {4, 1, 1}, 1).pr;
    std::uint32_t twos = 0;
    for (auto v : pr) twos += v == 2;
    CHECK(twos == 3);
    const auto counts = secant_sizes(pl, parabola_region(pl, {4, 1, 1}));
    const AffineFrame fr(pl);
    std::uint32_t direct = 0, total = 0;
    for (Elem d = 1; d < 5; ++d)
        for (Elem b = 0; b < 5; ++b) {
            direct += counts[fr.line(d, b)] == 2;
            ++total;
        }
    CHECK(direct == 12);
    CHECK(total == 20);
}

TEST_CASE("profile is a prefix sum of the character along the progression") {
    // For (1/4, 1, 1) and d = 1 the steps are chi(b - 1), so
    // pr_1(b) = pr_1(0) + Psi(p - 1, b - 1).
    for (std::uint32_t p : primes_between(5, 400)) {
        const Field f = make_field(p);
        const auto pr = projection_profile(f, {field_rational(f, 1, 4), 1, 1}, 1).pr;
        const Walk w = psi_walk(p, p - 1);
        std::vector<std::uint32_t> rebuilt(p);
        rebuilt[0] = pr[0];
        for (Elem b = 1; b < p; ++b) rebuilt[b] = pr[0] + w.values[b - 1];
        CHECK(rebuilt == pr);
    }
}

TEST_CASE("shifts match the closed form") {
    for (std::uint32_t p : primes_between(5, 80)) {
        const Field f = make_field(p);
        for (ParabolaParams pp : {ParabolaParams{1, 0, 0}, ParabolaParams{field_rational(f, 1, 4), 1, 1},
                                  ParabolaParams{2, 3, 1}}) {
            const LawReport rep = verify_projection_laws(f, pp);
            REQUIRE(rep.cyclic_shift.pass);
            const auto one = projection_profile(f, pp, 1).pr;
            for (Elem d = 1; d < p; ++d) {
                const Elem s = predicted_shift(f, pp, d);
                const auto prd = projection_profile(f, pp, d).pr;
                for (Elem b = 0; b < p; ++b) CHECK(prd[b] == one[(b + s) % p]);
            }
        }
    }
}

TEST_CASE("laws on small primes, with and without threads") {
    for (std::uint32_t p : primes_between(5, 61)) {
        const Field f = make_field(p);
        const ProjectivePlane pl = build_plane(f);
        for (ParabolaParams pp : {ParabolaParams{1, 0, 0}, ParabolaParams{field_rational(f, 1, 4), 1, 1},
                                  ParabolaParams{2, 3, 1}}) {
            const LawReport a = verify_projection_laws(pl, pp, {true, 1});
            const LawReport b = verify_projection_laws(pl, pp, {true, 3});
            CHECK(a.exact_laws_pass());
            CHECK(a.shifts == b.shifts);
            CHECK(a.range == b.range);
            CHECK(a.slopes_checked == p - 1);
        }
    }
}

TEST_CASE("law checker rejects invalid parameters") {
    CHECK_THROWS_AS((void)verify_projection_laws(make_field(9), {1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)verify_projection_laws(make_field(7), {0, 1, 1}), std::invalid_argument);
}
