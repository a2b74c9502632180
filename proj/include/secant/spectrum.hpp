#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "secant/plane.hpp"
#include "secant/point_set.hpp"

namespace secant {

/// Exact nonnegative-denominator rational, kept in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Secant sizes n_l of a point set, its histogram L_k and the mode.
struct SecantSpectrum {
    std::uint32_t q = 0;
    std::uint32_t lines = 0;  // N
    std::uint32_t set_size = 0;
    std::vector<std::uint32_t> line_counts;  // n_l, indexed by line
    std::vector<std::uint32_t> histogram;    // L_k for k in [0, q+1]
    Rational mu;                             // s(q+1)/N
    std::uint32_t mode_k = 0;                // smallest maximizer
    std::uint32_t mode_count = 0;            // M = max_k L_k
};

/// Residuals of the double-counting identities; all zero for a valid spectrum.
struct IdentityReport {
    std::int64_t eq1 = 0;  // sum n - s(q+1)
    std::int64_t eq2 = 0;  // sum n(n-1) - s(s-1)
    std::int64_t var = 0;  // N sum n^2 - (sum n)^2 - q s (N - s)
    bool ok() const noexcept { return eq1 == 0 && eq2 == 0 && var == 0; }
};

struct BoundsReport {
    Rational variance;  // V = q s (1 - s/N)
    double prop_bound = 0;     // N^{3/2} / sqrt(12 V + 13 N)
    double cor_bound = 0;      // N / sqrt(3q + 13)
    std::uint32_t cor_ceiling = 0;
    double thm_lower = 0;      // q^{3/2}/sqrt(3) - 3q, may be negative
    double thm_upper_ref = 0;  // sqrt(2/pi) q^{3/2}
};

enum class CountingKernel { Auto, Bitmap, AffineShift, Gather };
std::string_view kernel_name(CountingKernel k) noexcept;

struct SpectrumOptions {
    CountingKernel kernel = CountingKernel::Auto;
    unsigned threads = 1;
};

/// n_l for every line. Bitmap popcounts when the plane carries bitmaps, the
/// affine shift-accumulate kernel for larger prime planes, point-list gathers
/// otherwise.
std::vector<std::uint32_t> secant_sizes(const ProjectivePlane& plane, const PointSet& set,
                                        SpectrumOptions opts = {});

SecantSpectrum compute_spectrum(const ProjectivePlane& plane, const PointSet& set, SpectrumOptions opts = {});

/// Assembles histogram and mode from raw line counts.
SecantSpectrum spectrum_from_counts(std::uint32_t q, std::uint32_t set_size, std::vector<std::uint32_t> counts);

IdentityReport verify_counting_identities(const SecantSpectrum& spec);

BoundsReport bounds_report(std::uint32_t q, std::uint32_t s);

/// (mode_k, mode_count) with the smallest k among maximizers.
std::pair<std::uint32_t, std::uint32_t> max_frequency(const SecantSpectrum& spec);
std::pair<std::uint32_t, std::uint32_t> max_frequency(const std::vector<std::uint32_t>& histogram);

/// ceil(N / sqrt(3q + 13)) computed in integers.
std::uint32_t lower_bound_ceiling(std::uint32_t q);

/// Every spectrum assembled in this process is checked against
/// lower_bound_ceiling(); the tally is readable from tests and the CLI.
struct LowerBoundAudit {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
};
LowerBoundAudit lower_bound_audit() noexcept;
void record_lower_bound(std::uint32_t q, std::uint32_t mode_count) noexcept;

}  // namespace secant
