#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "secant/field.hpp"

namespace secant {

using PointIndex = std::uint32_t;
using LineIndex = std::uint32_t;

/// Homogeneous coordinates of a point (x:y:z) or a line [a:b:c].
struct Triple {
    Elem x = 0, y = 0, z = 0;
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Dense incidence bitmaps: one row of ceil(N/64) words per line.
class IncidenceBitmaps {
public:
    IncidenceBitmaps() = default;
    IncidenceBitmaps(std::size_t lines, std::size_t points);

    std::size_t words_per_row() const noexcept { return words_; }
    std::size_t rows() const noexcept { return rows_; }
    std::span<const std::uint64_t> row(std::size_t i) const noexcept {
        return {bits_.data() + i * words_, words_};
    }
    std::span<std::uint64_t> row(std::size_t i) noexcept { return {bits_.data() + i * words_, words_}; }
    const std::uint64_t* data() const noexcept { return bits_.data(); }

private:
    std::size_t rows_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// PG(2, q) with canonical indexing.
///
/// Points and lines are normalized so that the first nonzero coordinate is 1
/// and are ordered by the encoding x*q^2 + y*q + z. That order gives a closed
/// form for the index:
///   (0:0:1) -> 0,  (0:1:z) -> 1 + z,  (1:y:z) -> 1 + q + y*q + z.
/// Lines use the same scheme on their dual coordinates.
///
/// Incidence lists and bitmaps are materialized only while they fit under
/// kMaterializeLimit entries; above that, line_points() computes on demand.
class ProjectivePlane {
public:
    static constexpr std::size_t kMaterializeLimit = std::size_t{1} << 22;  // (q+1)*N entries
    static constexpr std::size_t kBitmapLimitBytes = std::size_t{64} << 20;

    const Field& field() const noexcept { return field_; }
    std::uint32_t q() const noexcept { return field_.q(); }
    std::uint32_t size() const noexcept { return n_; }  // N = q^2 + q + 1

    const std::vector<Triple>& points() const noexcept { return coords_; }
    const std::vector<Triple>& lines() const noexcept { return coords_; }  // same canonical list
    Triple point(PointIndex i) const { return coords_[i]; }
    Triple line(LineIndex i) const { return coords_[i]; }

    /// Index of the point with these (possibly unnormalized) coordinates.
    PointIndex point_index(Triple t) const;
    LineIndex line_index(Triple t) const { return point_index(t); }

    bool incident(PointIndex pt, LineIndex ln) const noexcept;

    /// Sorted indices of the q+1 points on a line.
    std::vector<PointIndex> line_points(LineIndex ln) const;
    /// Sorted indices of the q+1 lines through a point.
    std::vector<LineIndex> point_lines(PointIndex pt) const;

    bool has_incidence_lists() const noexcept { return !line_points_.empty(); }
    std::span<const PointIndex> line_points_view(LineIndex ln) const {
        return {line_points_.data() + static_cast<std::size_t>(ln) * (q() + 1), q() + 1};
    }
    std::span<const LineIndex> point_lines_view(PointIndex pt) const {
        return {point_lines_.data() + static_cast<std::size_t>(pt) * (q() + 1), q() + 1};
    }

    bool has_bitmaps() const noexcept { return bitmaps_.rows() != 0; }
    const IncidenceBitmaps& bitmaps() const noexcept { return bitmaps_; }

    /// The unique line through two distinct points; throws on P == Q.
    LineIndex line_through(PointIndex a, PointIndex b) const;
    /// The unique common point of two distinct lines.
    PointIndex meet(LineIndex a, LineIndex b) const;

    Triple normalize(Triple t) const;
    Triple cross(Triple a, Triple b) const noexcept;

private:
    friend ProjectivePlane build_plane(const Field& field);
    explicit ProjectivePlane(Field f) : field_(std::move(f)) {}

    Field field_;
    std::uint32_t n_ = 0;
    std::vector<Triple> coords_;
    std::vector<PointIndex> line_points_;
    std::vector<LineIndex> point_lines_;
    IncidenceBitmaps bitmaps_;
};

ProjectivePlane build_plane(const Field& field);

/// AG(2, q) inside PG(2, q): affine point (x, y) is (x:y:1).
class AffineFrame {
public:
    explicit AffineFrame(const ProjectivePlane& plane) : plane_(&plane) {}

    const ProjectivePlane& plane() const noexcept { return *plane_; }

    PointIndex point(Elem x, Elem y) const;
    /// Point at infinity in direction of slope d, i.e. (1:d:0).
    PointIndex direction(Elem d) const;
    /// Common point at infinity of the vertical lines, (0:1:0).
    PointIndex vertical_direction() const noexcept { return 1; }

    /// Line y = d*x + b, i.e. [d : -1 : b].
    LineIndex line(Elem d, Elem b) const;
    /// Vertical line x = c, i.e. [1 : 0 : -c].
    LineIndex vertical(Elem c) const;
    LineIndex infinity() const noexcept;

    /// Affine coordinates of a point, or nothing when it lies at infinity.
    std::optional<std::array<Elem, 2>> coords(PointIndex pt) const;

    std::uint64_t affine_point_count() const noexcept {
        return static_cast<std::uint64_t>(plane_->q()) * plane_->q();
    }

private:
    const ProjectivePlane* plane_;
};

inline AffineFrame affine_embed(const ProjectivePlane& plane) { return AffineFrame(plane); }

}  // namespace secant
