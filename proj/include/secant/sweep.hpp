#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "secant/construct.hpp"
#include "secant/plane.hpp"
#include "secant/point_set.hpp"
#include "secant/spectrum.hpp"

namespace secant {

/// One of the named point-set constructions, parsed from the command-line
/// syntax `random:density=1/2,seed=S`, `parabola:a=1/4,b=1,g=1`,
/// `family:c=NUM/DEN` or `ecregion`.
struct ConstructionSpec {
    enum class Kind { Random, Parabola, Family, EcRegion };
    Kind kind = Kind::Random;
    Rational density{1, 2};
    bool has_seed = false;
    std::uint64_t seed = 0;
    Rational alpha{1, 1}, beta{0, 1}, gamma{0, 1};
    FamilyParams c{1, 2};

    /// Canonical text form; parse(to_string()) round-trips.
    std::string to_string() const;
    bool seeded() const noexcept { return kind == Kind::Random; }
};

ConstructionSpec parse_construction(std::string_view text);

/// Builds the set; `seed` is used when the spec itself carries none.
PointSet build_construction(const ProjectivePlane& plane, const ConstructionSpec& spec, std::uint64_t seed);

struct SweepRow {
    std::uint32_t q = 0;
    std::string construction;
    std::uint64_t seed = 0;
    std::uint32_t set_size = 0;
    std::uint32_t mode_k = 0;
    std::uint32_t mode_count = 0;
    double cor_bound = 0;
    std::uint32_t cor_ceiling = 0;
    double prop_bound = 0;
    double thm_lower = 0;
    double thm_lower_clamped = 0;
    double ratio = 0;  // mode_count / q^{3/2}
    IdentityReport checks;
    bool bound_ok = false;
    std::string error;

    bool passed() const noexcept { return error.empty() && checks.ok() && bound_ok; }
};

struct SweepOptions {
    std::vector<std::uint32_t> primes;
    ConstructionSpec construction;
    std::vector<std::uint64_t> seeds;
    unsigned threads = 1;
};

/// One row per (prime, seed), in input order; identical for any thread count.
std::vector<SweepRow> run_sweep(const SweepOptions& opts);

inline constexpr std::string_view kSweepSchema = "# secant-sweep schema=1";

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// Fixed-format decimal used in every CSV/JSON float column.
std::string format_fixed(double v, int digits = 6);

}  // namespace secant
