#pragma once

#include <cstdint>
#include <vector>

#include "secant/plane.hpp"
#include "secant/point_set.hpp"
#include "secant/spectrum.hpp"

namespace secant {

/// Y^2 = X^3 + aX + b over F_p with its point count and trace.
struct Curve {
    std::uint32_t p = 0;
    Elem a = 0, b = 0;
    std::uint64_t count = 0;  // |E(F_p)| including the point at infinity
    std::int64_t trace = 0;   // p + 1 - count
};

/// Character-sum count 1 + sum_x (1 + chi(x^3 + a x + b)); throws on a singular curve.
Curve curve_count(std::uint32_t p, std::int64_t a, std::int64_t b);

/// Number of distinct roots of X^3 - m X - b in F_p.
std::uint32_t cubic_root_count(std::uint32_t p, std::int64_t m, std::int64_t b);

enum class LineStatus { Checked, Vertical, Singular };

/// Relation between the line v = m x + b, the elliptic-curve region and
/// the curve Y^2 = X^3 - m X - b.
struct LineCurveRelation {
    Elem m = 0, b = 0;
    LineStatus status = LineStatus::Checked;
    std::uint32_t secant = 0;       // n_l
    std::uint32_t roots = 0;        // Z
    std::uint64_t curve_points = 0;  // |E|
    bool holds = false;             // curve_points == 2 n_l + 1 - Z
};

/// `region` must be ec_region(plane). Singular lines come back with status Singular.
LineCurveRelation line_curve_check(const ProjectivePlane& plane, const PointSet& region, Elem m, Elem b);

struct EcScanReport {
    std::uint32_t p = 0;
    SecantSpectrum spectrum;
    std::uint64_t lines_checked = 0;
    std::uint64_t relation_violations = 0;
    std::uint64_t skipped_lines = 0;  // vertical or singular
    double context_scale = 0;         // p^{3/2} log p (log log p)^2
    double mode_ratio = 0;            // mode_count / context_scale
    double mode_ratio_q32 = 0;        // mode_count / p^{3/2}
};

EcScanReport ec_spectrum_scan(const ProjectivePlane& plane, unsigned threads = 1);

}  // namespace secant
