#include "secant/plane.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace secant {

IncidenceBitmaps::IncidenceBitmaps(std::size_t lines, std::size_t points)
    : rows_(lines), words_((points + 63) / 64), bits_(rows_ * words_, 0) {}

Triple ProjectivePlane::normalize(Triple t) const {
    const Field& f = field_;
    Elem lead = t.x != 0 ? t.x : (t.y != 0 ? t.y : t.z);
    if (lead == 0) throw std::invalid_argument("zero triple is not a projective point");
    const Elem s = f.inv(lead);
    return {f.mul(t.x, s), f.mul(t.y, s), f.mul(t.z, s)};
}

Triple ProjectivePlane::cross(Triple a, Triple b) const noexcept {
    const Field& f = field_;
    return {f.sub(f.mul(a.y, b.z), f.mul(a.z, b.y)),
            f.sub(f.mul(a.z, b.x), f.mul(a.x, b.z)),
            f.sub(f.mul(a.x, b.y), f.mul(a.y, b.x))};
}

PointIndex ProjectivePlane::point_index(Triple t) const {
    const Triple n = normalize(t);
    const std::uint32_t qq = q();
    if (n.x == 1) return 1 + qq + n.y * qq + n.z;
    if (n.y == 1) return 1 + n.z;
    return 0;
}

bool ProjectivePlane::incident(PointIndex pt, LineIndex ln) const noexcept {
    const Field& f = field_;
    const Triple a = coords_[pt], l = coords_[ln];
    return f.add(f.add(f.mul(a.x, l.x), f.mul(a.y, l.y)), f.mul(a.z, l.z)) == 0;
}

namespace {

// Points of the dual-coordinate triple l, using the canonical index layout.
std::vector<PointIndex> incident_indices(const Field& f, Triple l) {
    const std::uint32_t q = f.q();
    std::vector<PointIndex> out;
    out.reserve(q + 1);
    // (0:0:1)
    if (l.z == 0) out.push_back(0);
    // (0:1:z): b + c z = 0
    if (l.z != 0) {
        const Elem z = f.neg(f.div(l.y, l.z));
        out.push_back(1 + z);
    } else if (l.y == 0) {
        for (Elem z = 0; z < q; ++z) out.push_back(1 + z);
    }
    // (1:y:z): a + b y + c z = 0
    if (l.z != 0) {
        const Elem cinv = f.inv(l.z);
        for (Elem y = 0; y < q; ++y) {
            const Elem z = f.neg(f.mul(f.add(l.x, f.mul(l.y, y)), cinv));
            out.push_back(1 + q + y * q + z);
        }
    } else if (l.y != 0) {
        const Elem y = f.neg(f.div(l.x, l.y));
        for (Elem z = 0; z < q; ++z) out.push_back(1 + q + y * q + z);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<PointIndex> ProjectivePlane::line_points(LineIndex ln) const {
    if (has_incidence_lists()) {
        auto v = line_points_view(ln);
        return {v.begin(), v.end()};
    }
    return incident_indices(field_, coords_[ln]);
}

std::vector<LineIndex> ProjectivePlane::point_lines(PointIndex pt) const {
    if (has_incidence_lists()) {
        auto v = point_lines_view(pt);
        return {v.begin(), v.end()};
    }
    // Incidence is symmetric in the shared canonical coordinate list.
    return incident_indices(field_, coords_[pt]);
}

LineIndex ProjectivePlane::line_through(PointIndex a, PointIndex b) const {
    if (a == b) throw std::invalid_argument("identical points");
    return line_index(cross(coords_[a], coords_[b]));
}

PointIndex ProjectivePlane::meet(LineIndex a, LineIndex b) const {
    if (a == b) throw std::invalid_argument("identical lines");
    return point_index(cross(coords_[a], coords_[b]));
}

ProjectivePlane build_plane(const Field& field) {
    ProjectivePlane plane(field);
    const std::uint32_t q = field.q();
    const std::uint64_t n64 = static_cast<std::uint64_t>(q) * q + q + 1;
    if (n64 > (std::uint64_t{1} << 31)) throw std::invalid_argument("plane too large");
    const auto n = static_cast<std::uint32_t>(n64);
    plane.n_ = n;

    plane.coords_.reserve(n);
    plane.coords_.push_back({0, 0, 1});
    for (Elem z = 0; z < q; ++z) plane.coords_.push_back({0, 1, z});
    for (Elem y = 0; y < q; ++y)
        for (Elem z = 0; z < q; ++z) plane.coords_.push_back({1, y, z});

    const std::size_t entries = static_cast<std::size_t>(n) * (q + 1);
    if (entries <= ProjectivePlane::kMaterializeLimit) {
        plane.line_points_.resize(entries);
        plane.point_lines_.resize(entries);
        std::vector<std::uint32_t> fill(n, 0);
        for (LineIndex l = 0; l < n; ++l) {
            const auto pts = incident_indices(field, plane.coords_[l]);
            std::copy(pts.begin(), pts.end(), plane.line_points_.begin() + static_cast<std::ptrdiff_t>(l) * (q + 1));
            // lines are visited in increasing order, so point_lines come out sorted
            for (PointIndex pt : pts)
                plane.point_lines_[static_cast<std::size_t>(pt) * (q + 1) + fill[pt]++] = l;
        }
        const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
        if (static_cast<std::size_t>(n) * words * 8 <= ProjectivePlane::kBitmapLimitBytes) {
            plane.bitmaps_ = IncidenceBitmaps(n, n);
            for (LineIndex l = 0; l < n; ++l) {
                auto row = plane.bitmaps_.row(l);
                for (PointIndex pt : plane.line_points_view(l)) row[pt / 64] |= std::uint64_t{1} << (pt % 64);
            }
        }
    }
    return plane;
}

PointIndex AffineFrame::point(Elem x, Elem y) const {
    const std::uint32_t q = plane_->q();
    const Field& f = plane_->field();
    if (x != 0) {
        const Elem xi = f.inv(x);
        return 1 + q + f.mul(y, xi) * q + xi;
    }
    if (y != 0) return 1 + f.inv(y);
    return 0;
}

PointIndex AffineFrame::direction(Elem d) const { return 1 + plane_->q() + d * plane_->q(); }

LineIndex AffineFrame::line(Elem d, Elem b) const {
    const std::uint32_t q = plane_->q();
    const Field& f = plane_->field();
    if (d != 0) {
        // [1 : -1/d : b/d]
        const Elem di = f.inv(d);
        return 1 + q + f.neg(di) * q + f.mul(b, di);
    }
    // [0 : 1 : -b]
    return 1 + f.neg(b);
}

LineIndex AffineFrame::vertical(Elem c) const {
    const std::uint32_t q = plane_->q();
    return 1 + q + 0 * q + plane_->field().neg(c);
}

LineIndex AffineFrame::infinity() const noexcept { return 0; }

std::optional<std::array<Elem, 2>> AffineFrame::coords(PointIndex pt) const {
    const Triple t = plane_->point(pt);
    if (t.z == 0) return std::nullopt;
    const Field& f = plane_->field();
    const Elem zi = f.inv(t.z);
    return std::array<Elem, 2>{f.mul(t.x, zi), f.mul(t.y, zi)};
}

}  // namespace secant
