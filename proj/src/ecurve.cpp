#include "secant/ecurve.hpp"

#include <cmath>
#include <stdexcept>

#include "secant/construct.hpp"
#include "secant/parallel.hpp"

namespace secant {

namespace {

void require_prime_above_3(std::uint32_t p) {
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("parameter error: p must be a prime > 3");
}

std::uint64_t mod(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

// x^3 + a x + b mod p
std::uint64_t cubic(std::uint64_t x, std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    return (x * x % p * x + a * x + b) % p;
}

bool singular(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    return (4 * (a * a % p * a % p) + 27 * (b * b % p)) % p == 0;
}

}  // namespace

Curve curve_count(std::uint32_t p, std::int64_t a, std::int64_t b) {
    require_prime_above_3(p);
    const std::uint64_t am = mod(a, p), bm = mod(b, p);
    if (singular(am, bm, p)) throw std::invalid_argument("singular curve");
    std::int64_t chi_sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) chi_sum += legendre_mod(static_cast<std::int64_t>(cubic(x, am, bm, p)), p);
    Curve c;
    c.p = p;
    c.a = static_cast<Elem>(am);
    c.b = static_cast<Elem>(bm);
    c.count = static_cast<std::uint64_t>(1 + static_cast<std::int64_t>(p) + chi_sum);
    c.trace = static_cast<std::int64_t>(p) + 1 - static_cast<std::int64_t>(c.count);
    return c;
}

std::uint32_t cubic_root_count(std::uint32_t p, std::int64_t m, std::int64_t b) {
    require_prime_above_3(p);
    const std::uint64_t a = mod(-m, p), bb = mod(-b, p);
    std::uint32_t z = 0;
    for (std::uint64_t x = 0; x < p; ++x) z += cubic(x, a, bb, p) == 0;
    return z;
}

LineCurveRelation line_curve_check(const ProjectivePlane& plane, const PointSet& region, Elem m, Elem b) {
    const std::uint32_t p = plane.q();
    require_prime_above_3(p);
    if (!plane.field().is_prime()) throw std::invalid_argument("parameter error: prime field required");
    LineCurveRelation r;
    r.m = m % p;
    r.b = b % p;
    const std::uint64_t a = mod(-static_cast<std::int64_t>(r.m), p), bb = mod(-static_cast<std::int64_t>(r.b), p);
    if (singular(a, bb, p)) {
        r.status = LineStatus::Singular;
        return r;
    }
    const Field& f = plane.field();
    const AffineFrame frame(plane);
    for (Elem x = 0; x < p; ++x) r.secant += region.contains(frame.point(x, f.add(f.mul(r.m, x), r.b)));
    r.roots = cubic_root_count(p, r.m, r.b);
    r.curve_points = curve_count(p, -static_cast<std::int64_t>(r.m), -static_cast<std::int64_t>(r.b)).count;
    r.holds = r.curve_points + r.roots == 2ull * r.secant + 1;
    return r;
}

EcScanReport ec_spectrum_scan(const ProjectivePlane& plane, unsigned threads) {
    const std::uint32_t p = plane.q();
    require_prime_above_3(p);
    EcScanReport rep;
    rep.p = p;
    const PointSet region = ec_region(plane);
    rep.spectrum = compute_spectrum(plane, region, SpectrumOptions{CountingKernel::Auto, threads});

    const AffineFrame frame(plane);
    std::vector<std::uint64_t> checked(p, 0), violations(p, 0), skipped(p, 0);
    parallel_for(threads, p, [&](std::size_t begin, std::size_t end) {
        for (std::size_t mi = begin; mi < end; ++mi) {
            const auto m = static_cast<Elem>(mi);
            const std::uint64_t a = mod(-static_cast<std::int64_t>(m), p);
            for (Elem b = 0; b < p; ++b) {
                const std::uint64_t bb = mod(-static_cast<std::int64_t>(b), p);
                if (singular(a, bb, p)) {
                    ++skipped[mi];
                    continue;
                }
                const std::uint32_t n = rep.spectrum.line_counts[frame.line(m, b)];
                const std::uint64_t e = curve_count(p, -static_cast<std::int64_t>(m), -static_cast<std::int64_t>(b)).count;
                const std::uint32_t z = cubic_root_count(p, m, b);
                ++checked[mi];
                if (e + z != 2ull * n + 1) ++violations[mi];
            }
        }
    });
    for (std::uint32_t i = 0; i < p; ++i) {
        rep.lines_checked += checked[i];
        rep.relation_violations += violations[i];
        rep.skipped_lines += skipped[i];
    }
    rep.skipped_lines += p;  // vertical lines

    const double pd = p;
    const double lp = std::log(pd);
    const double llp = std::log(lp);
    rep.context_scale = std::pow(pd, 1.5) * lp * llp * llp;
    rep.mode_ratio = rep.spectrum.mode_count / rep.context_scale;
    rep.mode_ratio_q32 = rep.spectrum.mode_count / std::pow(pd, 1.5);
    return rep;
}

}  // namespace secant
