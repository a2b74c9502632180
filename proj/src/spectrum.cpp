#include "secant/spectrum.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "secant/parallel.hpp"
#include "secant/simd/kernels.hpp"

namespace secant {

namespace {

std::atomic<std::uint64_t> g_checked{0};
std::atomic<std::uint64_t> g_violations{0};

std::int64_t clamp_residual(__int128 v) noexcept {
    constexpr __int128 hi = INT64_MAX;
    constexpr __int128 lo = INT64_MIN;
    return static_cast<std::int64_t>(v > hi ? hi : (v < lo ? lo : v));
}

void count_bitmap(const ProjectivePlane& plane, const PointSet& set, std::vector<std::uint32_t>& out,
                  unsigned threads) {
    const auto& bm = plane.bitmaps();
    const auto& k = simd::kernels();
    parallel_for(threads, bm.rows(), [&](std::size_t begin, std::size_t end) {
        k.and_popcount_rows(bm.data(), bm.words_per_row(), begin, end, set.words().data(), out.data() + begin);
    });
}

void count_gather(const ProjectivePlane& plane, const PointSet& set, std::vector<std::uint32_t>& out,
                  unsigned threads) {
    parallel_for(threads, plane.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t l = begin; l < end; ++l) {
            std::uint32_t c = 0;
            if (plane.has_incidence_lists()) {
                for (PointIndex pt : plane.line_points_view(static_cast<LineIndex>(l))) c += set.contains(pt);
            } else {
                for (PointIndex pt : plane.line_points(static_cast<LineIndex>(l))) c += set.contains(pt);
            }
            out[l] = c;
        }
    });
}

// For prime q the affine lines of slope d are y = dx + b, so
//   n(d, b) = sum_x A[x][(d x + b) mod q] + [direction d in S],
// i.e. a sum of cyclically shifted columns of the affine membership table.
void count_affine_shift(const ProjectivePlane& plane, const PointSet& set, std::vector<std::uint32_t>& out,
                        unsigned threads) {
    const std::uint32_t q = plane.q();
    const AffineFrame frame(plane);
    std::vector<std::uint8_t> cols(static_cast<std::size_t>(q) * q);
    for (Elem x = 0; x < q; ++x)
        for (Elem y = 0; y < q; ++y) cols[static_cast<std::size_t>(x) * q + y] = set.contains(frame.point(x, y));

    const auto& k = simd::kernels();
    parallel_for(threads, q, [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint16_t> acc(q);
        for (std::size_t d = begin; d < end; ++d) {
            std::fill(acc.begin(), acc.end(), 0);
            std::uint32_t shift = 0;
            for (Elem x = 0; x < q; ++x) {
                k.shift_accumulate(acc.data(), cols.data() + static_cast<std::size_t>(x) * q, q, shift);
                shift += static_cast<std::uint32_t>(d);
                if (shift >= q) shift -= q;
            }
            const std::uint32_t at_inf = set.contains(frame.direction(static_cast<Elem>(d)));
            for (Elem b = 0; b < q; ++b) out[frame.line(static_cast<Elem>(d), b)] = acc[b] + at_inf;
        }
    });

    const std::uint32_t vdir = set.contains(frame.vertical_direction());
    for (Elem c = 0; c < q; ++c) {
        std::uint32_t n = vdir;
        for (Elem y = 0; y < q; ++y) n += cols[static_cast<std::size_t>(c) * q + y];
        out[frame.vertical(c)] = n;
    }
    std::uint32_t inf = vdir;
    for (Elem d = 0; d < q; ++d) inf += set.contains(frame.direction(d));
    out[frame.infinity()] = inf;
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::string_view kernel_name(CountingKernel k) noexcept {
    switch (k) {
        case CountingKernel::Bitmap: return "bitmap";
        case CountingKernel::AffineShift: return "affine-shift";
        case CountingKernel::Gather: return "gather";
        case CountingKernel::Auto: break;
    }
    return "auto";
}

std::vector<std::uint32_t> secant_sizes(const ProjectivePlane& plane, const PointSet& set, SpectrumOptions opts) {
    if (set.universe() != plane.size()) throw std::invalid_argument("point set does not belong to this plane");
    CountingKernel kernel = opts.kernel;
    if (kernel == CountingKernel::Auto) {
        if (plane.has_bitmaps())
            kernel = CountingKernel::Bitmap;
        else if (plane.field().is_prime() && plane.q() < 65536)
            kernel = CountingKernel::AffineShift;
        else
            kernel = CountingKernel::Gather;
    }
    std::vector<std::uint32_t> out(plane.size(), 0);
    switch (kernel) {
        case CountingKernel::Bitmap:
            if (!plane.has_bitmaps()) throw std::invalid_argument("plane has no incidence bitmaps");
            count_bitmap(plane, set, out, opts.threads);
            break;
        case CountingKernel::AffineShift:
            if (!plane.field().is_prime()) throw std::invalid_argument("affine shift kernel needs a prime field");
            count_affine_shift(plane, set, out, opts.threads);
            break;
        default:
            count_gather(plane, set, out, opts.threads);
            break;
    }
    return out;
}

SecantSpectrum spectrum_from_counts(std::uint32_t q, std::uint32_t set_size, std::vector<std::uint32_t> counts) {
    SecantSpectrum s;
    s.q = q;
    s.lines = static_cast<std::uint32_t>(counts.size());
    s.set_size = set_size;
    s.histogram.assign(q + 2, 0);
    for (std::uint32_t n : counts) {
        if (n > q + 1) throw std::logic_error("secant size exceeds line size");
        ++s.histogram[n];
    }
    s.line_counts = std::move(counts);
    s.mu = Rational::make(static_cast<std::int64_t>(set_size) * (q + 1), s.lines);
    std::tie(s.mode_k, s.mode_count) = max_frequency(s.histogram);
    record_lower_bound(q, s.mode_count);
    return s;
}

SecantSpectrum compute_spectrum(const ProjectivePlane& plane, const PointSet& set, SpectrumOptions opts) {
    return spectrum_from_counts(plane.q(), set.size(), secant_sizes(plane, set, opts));
}

IdentityReport verify_counting_identities(const SecantSpectrum& spec) {
    __int128 s1 = 0, s2 = 0, sf = 0;
    for (std::uint32_t n : spec.line_counts) {
        s1 += n;
        s2 += static_cast<__int128>(n) * n;
        sf += static_cast<__int128>(n) * (static_cast<__int128>(n) - 1);
    }
    const __int128 s = spec.set_size;
    const __int128 q = spec.q;
    const __int128 big_n = spec.lines;
    IdentityReport r;
    r.eq1 = clamp_residual(s1 - s * (q + 1));
    r.eq2 = clamp_residual(sf - s * (s - 1));
    r.var = clamp_residual(big_n * s2 - s1 * s1 - q * s * (big_n - s));
    return r;
}

BoundsReport bounds_report(std::uint32_t q, std::uint32_t s) {
    const std::uint64_t n = static_cast<std::uint64_t>(q) * q + q + 1;
    if (s > n) throw std::invalid_argument("set larger than the plane");
    BoundsReport b;
    b.variance = Rational::make(static_cast<std::int64_t>(q) * s * static_cast<std::int64_t>(n - s),
                                static_cast<std::int64_t>(n));
    const double nd = static_cast<double>(n);
    b.prop_bound = std::pow(nd, 1.5) / std::sqrt(12.0 * b.variance.value() + 13.0 * nd);
    b.cor_bound = nd / std::sqrt(3.0 * q + 13.0);
    b.cor_ceiling = lower_bound_ceiling(q);
    const double qd = q;
    b.thm_lower = std::pow(qd, 1.5) / std::sqrt(3.0) - 3.0 * qd;
    b.thm_upper_ref = std::sqrt(2.0 / std::numbers::pi) * std::pow(qd, 1.5);
    return b;
}

std::pair<std::uint32_t, std::uint32_t> max_frequency(const std::vector<std::uint32_t>& histogram) {
    std::uint32_t best_k = 0, best = 0;
    for (std::uint32_t k = 0; k < histogram.size(); ++k) {
        if (histogram[k] > best) {
            best = histogram[k];
            best_k = k;
        }
    }
    return {best_k, best};
}

std::pair<std::uint32_t, std::uint32_t> max_frequency(const SecantSpectrum& spec) {
    return max_frequency(spec.histogram);
}

std::uint32_t lower_bound_ceiling(std::uint32_t q) {
    const unsigned __int128 n = static_cast<unsigned __int128>(q) * q + q + 1;
    const unsigned __int128 d = 3 * static_cast<unsigned __int128>(q) + 13;
    auto m = static_cast<std::uint64_t>(std::ceil(static_cast<double>(n) / std::sqrt(static_cast<double>(d))));
    while (m > 0 && static_cast<unsigned __int128>(m - 1) * (m - 1) * d >= n * n) --m;
    while (static_cast<unsigned __int128>(m) * m * d < n * n) ++m;
    return static_cast<std::uint32_t>(m);
}

LowerBoundAudit lower_bound_audit() noexcept {
    return {g_checked.load(std::memory_order_relaxed), g_violations.load(std::memory_order_relaxed)};
}

void record_lower_bound(std::uint32_t q, std::uint32_t mode_count) noexcept {
    g_checked.fetch_add(1, std::memory_order_relaxed);
    if (mode_count < lower_bound_ceiling(q)) g_violations.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace secant
