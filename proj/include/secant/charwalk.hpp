#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "secant/construct.hpp"
#include "secant/field.hpp"
#include "secant/plane.hpp"

namespace secant {

/// Prefix sums Psi(a, t) = sum_{j=0}^{t} chi(a + j), t in [0, p-1].
struct Walk {
    std::uint32_t p = 0;
    Elem a = 0;
    std::vector<std::int32_t> values;
};

Walk psi_walk(std::uint32_t p, Elem a);

/// Phi(u, a) = sum_{t=0}^{a-1} chi(u - t); requires 0 <= a <= p.
std::int64_t phi_sum(std::uint32_t p, std::int64_t u, std::uint32_t a);

/// Occupation statistics of a walk. The envelope flags are informational.
struct LevelStats {
    std::map<std::int32_t, std::uint32_t> counts;
    std::uint32_t zero_count = 0;
    std::uint32_t max_level_count = 0;
    std::int32_t max_level = 0;  // smallest level attaining max_level_count
    std::int32_t min_value = 0;
    std::int32_t max_value = 0;
    std::int32_t range = 0;
    bool range_within_sqrt_log = false;     // range <= sqrt(p) ln p
    bool zeros_within_sqrt_log2 = false;    // zero_count <= sqrt(p) ln^2 p
};

LevelStats level_stats(const Walk& walk);

/// pr_d(b) = |S ∩ {y = d x + b}| for the parabola region S.
struct ProjectionProfile {
    std::uint32_t p = 0;
    ParabolaParams params;
    Elem d = 1;
    std::vector<std::uint32_t> pr;
};

/// O(p): pr_d(0) by direct count, then pr_d(b+1) = pr_d(b) + h(b) - 1 where
/// h(b) counts x with f(x) = d x + b.
ProjectionProfile projection_profile(const Field& field, const ParabolaParams& params, Elem d);
ProjectionProfile projection_profile(const ProjectivePlane& plane, const ParabolaParams& params, Elem d);

struct LawCheck {
    bool pass = true;
    std::string counterexample;  // first failure, empty on pass
};

struct LawReport {
    std::uint32_t p = 0;
    ParabolaParams params;
    LawCheck difference;     // L1: pr_d(b+1) - pr_d(b) = chi((beta-d)^2 + 4 alpha (b - gamma))
    LawCheck interval;       // L2: steps in {-1,0,1}, image an interval
    LawCheck cyclic_shift;   // L3: pr_d = pr_1 shifted
    LawCheck factorization;  // L4: (p-1) * |{b : pr_1(b) = k}| non-vertical non-horizontal k-secants
    LawCheck range_bounds;   // L5: sqrt(p)/(2 pi) <= range <= sqrt(p) ln p
    std::vector<std::uint32_t> shifts;  // s_d with pr_d(b) = pr_1(b + s_d); index d, entry 0 unused
    std::int32_t range = 0;
    double range_lower = 0;
    double range_upper = 0;
    // Displayed form -chi((beta-1)^2 + 4 alpha (b+1-gamma)) evaluated on d = 1.
    std::uint32_t displayed_form_matches = 0;
    std::uint32_t slopes_checked = 0;
    bool exact_laws_pass() const noexcept {
        return difference.pass && interval.pass && cyclic_shift.pass && factorization.pass;
    }
    bool all_pass() const noexcept { return exact_laws_pass() && range_bounds.pass; }
};

struct LawOptions {
    bool check_factorization = true;  // L4 needs a full spectrum of the region
    unsigned threads = 1;
};

LawReport verify_projection_laws(const ProjectivePlane& plane, const ParabolaParams& params, LawOptions opts = {});

/// Only L1, L2, L3, L5 (no plane needed).
LawReport verify_projection_laws(const Field& field, const ParabolaParams& params, unsigned threads = 1);

/// Predicted shift ((beta - d)^2 - (beta - 1)^2) / (4 alpha).
Elem predicted_shift(const Field& field, const ParabolaParams& params, Elem d);

}  // namespace secant
