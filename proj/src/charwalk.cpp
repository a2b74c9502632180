#include "secant/charwalk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "secant/parallel.hpp"
#include "secant/spectrum.hpp"

namespace secant {

namespace {

void require_odd_prime(std::uint32_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

std::vector<std::int8_t> chi_table(std::uint32_t p) {
    std::vector<std::int8_t> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t x = 1; x < p; ++x) chi[x * x % p] = 1;
    return chi;
}

Elem parabola_value(const Field& f, const ParabolaParams& pp, Elem x) {
    return f.add(f.add(f.mul(pp.alpha, f.mul(x, x)), f.mul(pp.beta, x)), pp.gamma);
}

ParabolaParams reduce(const Field& f, const ParabolaParams& pp) {
    if (!f.is_prime() || f.p() <= 3) throw std::invalid_argument("parameter error: projection needs a prime p > 3");
    ParabolaParams r{pp.alpha % f.p(), pp.beta % f.p(), pp.gamma % f.p()};
    if (r.alpha == 0) throw std::invalid_argument("parameter error: alpha must be nonzero");
    return r;
}

void fail(LawCheck& c, std::string msg) {
    if (c.pass) {
        c.pass = false;
        c.counterexample = std::move(msg);
    }
}

// L1, L2 on one profile.
void check_profile(const Field& f, const ParabolaParams& pp, const std::vector<std::uint32_t>& pr, Elem d,
                   LawCheck& diff, LawCheck& interval) {
    const std::uint32_t p = f.p();
    // (beta - d)^2 + 4 alpha (b - gamma)
    const Elem bd = f.sub(pp.beta, d);
    const Elem base = f.sub(f.mul(bd, bd), f.mul(f.from_int(4), f.mul(pp.alpha, pp.gamma)));
    const Elem four_alpha = f.mul(f.from_int(4), pp.alpha);
    std::uint32_t lo = pr[0], hi = pr[0];
    for (Elem b = 0; b < p; ++b) {
        const std::int64_t delta = static_cast<std::int64_t>(pr[(b + 1) % p]) - pr[b];
        const int expected = f.legendre(f.add(base, f.mul(four_alpha, b)));
        if (delta != expected)
            fail(diff, "d=" + std::to_string(d) + " b=" + std::to_string(b) + " delta=" + std::to_string(delta) +
                           " chi=" + std::to_string(expected));
        if (delta < -1 || delta > 1)
            fail(interval, "d=" + std::to_string(d) + " b=" + std::to_string(b) + " step " + std::to_string(delta));
        lo = std::min(lo, pr[b]);
        hi = std::max(hi, pr[b]);
    }
    std::vector<bool> seen(hi - lo + 1, false);
    for (std::uint32_t v : pr) seen[v - lo] = true;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) fail(interval, "d=" + std::to_string(d) + " value " + std::to_string(lo + i) + " skipped");
}

std::int64_t find_shift(const std::vector<std::uint32_t>& base, const std::vector<std::uint32_t>& pr) {
    const std::size_t p = base.size();
    for (std::size_t s = 0; s < p; ++s) {
        bool ok = true;
        for (std::size_t b = 0; b < p && ok; ++b) ok = pr[b] == base[(b + s) % p];
        if (ok) return static_cast<std::int64_t>(s);
    }
    return -1;
}

LawReport run_laws(const Field& f, const ParabolaParams& params, const ProjectivePlane* plane, LawOptions opts) {
    const ParabolaParams pp = reduce(f, params);
    const std::uint32_t p = f.p();
    LawReport rep;
    rep.p = p;
    rep.params = pp;
    rep.shifts.assign(p, 0);
    rep.slopes_checked = p - 1;

    const ProjectionProfile one = projection_profile(f, pp, 1);

    // Per-slope checks, merged in slope order afterwards.
    struct SlopeResult {
        LawCheck diff, interval, shift;
        std::uint32_t s = 0;
    };
    std::vector<SlopeResult> per(p);
    parallel_for(opts.threads, p - 1, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Elem d = static_cast<Elem>(i + 1);
            SlopeResult& r = per[d];
            const ProjectionProfile prof = d == 1 ? one : projection_profile(f, pp, d);
            check_profile(f, pp, prof.pr, d, r.diff, r.interval);
            const std::int64_t s = find_shift(one.pr, prof.pr);
            if (s < 0)
                fail(r.shift, "d=" + std::to_string(d) + " is not a cyclic shift of d=1");
            else
                r.s = static_cast<std::uint32_t>(s);
        }
    });
    for (Elem d = 1; d < p; ++d) {
        const SlopeResult& r = per[d];
        if (!r.diff.pass) fail(rep.difference, r.diff.counterexample);
        if (!r.interval.pass) fail(rep.interval, r.interval.counterexample);
        if (!r.shift.pass) fail(rep.cyclic_shift, r.shift.counterexample);
        rep.shifts[d] = r.s;
    }

    // displayed form on d = 1: -chi((beta-1)^2 + 4 alpha (b + 1 - gamma))
    {
        const Elem b1 = f.sub(pp.beta, 1);
        const Elem four_alpha = f.mul(f.from_int(4), pp.alpha);
        for (Elem b = 0; b < p; ++b) {
            const std::int64_t delta = static_cast<std::int64_t>(one.pr[(b + 1) % p]) - one.pr[b];
            const Elem arg = f.add(f.mul(b1, b1), f.mul(four_alpha, f.sub(f.add(b, 1), pp.gamma)));
            if (-f.legendre(arg) == delta) ++rep.displayed_form_matches;
        }
    }

    const auto [mn, mx] = std::minmax_element(one.pr.begin(), one.pr.end());
    rep.range = static_cast<std::int32_t>(*mx - *mn);
    rep.range_lower = std::sqrt(static_cast<double>(p)) / (2.0 * std::numbers::pi);
    rep.range_upper = std::sqrt(static_cast<double>(p)) * std::log(static_cast<double>(p));
    if (rep.range < rep.range_lower || rep.range > rep.range_upper)
        fail(rep.range_bounds, "range " + std::to_string(rep.range) + " outside [" + std::to_string(rep.range_lower) +
                                   ", " + std::to_string(rep.range_upper) + "]");

    if (plane != nullptr && opts.check_factorization) {
        // Direct count over the plane, independent of the profile recurrence.
        const PointSet region = parabola_region(*plane, pp);
        const auto counts = secant_sizes(*plane, region, SpectrumOptions{CountingKernel::Auto, opts.threads});
        const AffineFrame frame(*plane);
        std::vector<std::uint64_t> direct(p + 2, 0), predicted(p + 2, 0);
        for (Elem d = 1; d < p; ++d)
            for (Elem b = 0; b < p; ++b) ++direct[counts[frame.line(d, b)]];
        for (Elem b = 0; b < p; ++b) predicted[one.pr[b]] += p - 1;
        for (std::uint32_t k = 0; k < p + 2; ++k)
            if (direct[k] != predicted[k])
                fail(rep.factorization, "k=" + std::to_string(k) + " direct=" + std::to_string(direct[k]) +
                                            " predicted=" + std::to_string(predicted[k]));
    }
    return rep;
}

}  // namespace

Walk psi_walk(std::uint32_t p, Elem a) {
    require_odd_prime(p);
    const auto chi = chi_table(p);
    Walk w{p, a % p, std::vector<std::int32_t>(p)};
    std::int32_t acc = 0;
    for (std::uint32_t t = 0; t < p; ++t) {
        acc += chi[(w.a + t) % p];
        w.values[t] = acc;
    }
    return w;
}

std::int64_t phi_sum(std::uint32_t p, std::int64_t u, std::uint32_t a) {
    require_odd_prime(p);
    if (a > p) throw std::invalid_argument("window longer than p");
    std::int64_t s = 0;
    for (std::uint32_t t = 0; t < a; ++t) s += legendre_mod(u - static_cast<std::int64_t>(t), p);
    return s;
}

LevelStats level_stats(const Walk& walk) {
    LevelStats st;
    if (walk.values.empty()) return st;
    for (std::int32_t v : walk.values) ++st.counts[v];
    st.zero_count = st.counts.count(0) ? st.counts.at(0) : 0;
    for (const auto& [level, c] : st.counts) {
        if (c > st.max_level_count) {
            st.max_level_count = c;
            st.max_level = level;
        }
    }
    st.min_value = st.counts.begin()->first;
    st.max_value = st.counts.rbegin()->first;
    st.range = st.max_value - st.min_value;
    const double sp = std::sqrt(static_cast<double>(walk.p));
    const double lp = std::log(static_cast<double>(walk.p));
    st.range_within_sqrt_log = st.range <= sp * lp;
    st.zeros_within_sqrt_log2 = st.zero_count <= sp * lp * lp;
    return st;
}

ProjectionProfile projection_profile(const Field& field, const ParabolaParams& params, Elem d) {
    const ParabolaParams pp = reduce(field, params);
    const std::uint32_t p = field.p();
    if (d % p == 0) throw std::invalid_argument("horizontal slope excluded");
    d %= p;
    ProjectionProfile prof{p, pp, d, std::vector<std::uint32_t>(p)};
    std::vector<std::uint32_t> hits(p, 0);
    std::uint32_t first = 0;
    for (Elem x = 0; x < p; ++x) {
        const Elem fx = parabola_value(field, pp, x);
        const Elem dx = field.mul(d, x);
        if (fx < dx) ++first;
        ++hits[field.sub(fx, dx)];
    }
    prof.pr[0] = first;
    for (Elem b = 0; b + 1 < p; ++b) prof.pr[b + 1] = prof.pr[b] + hits[b] - 1;
    return prof;
}

ProjectionProfile projection_profile(const ProjectivePlane& plane, const ParabolaParams& params, Elem d) {
    return projection_profile(plane.field(), params, d);
}

LawReport verify_projection_laws(const ProjectivePlane& plane, const ParabolaParams& params, LawOptions opts) {
    return run_laws(plane.field(), params, &plane, opts);
}

LawReport verify_projection_laws(const Field& field, const ParabolaParams& params, unsigned threads) {
    return run_laws(field, params, nullptr, LawOptions{false, threads});
}

Elem predicted_shift(const Field& f, const ParabolaParams& params, Elem d) {
    const ParabolaParams pp = reduce(f, params);
    const Elem bd = f.sub(pp.beta, d), b1 = f.sub(pp.beta, 1);
    return f.div(f.sub(f.mul(bd, bd), f.mul(b1, b1)), f.mul(f.from_int(4), pp.alpha));
}

}  // namespace secant
