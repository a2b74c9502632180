#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "secant/legit.hpp"
#include "secant/plane.hpp"
#include "secant/point_set.hpp"
#include "secant/spectrum.hpp"

namespace secant::io {

using nlohmann::ordered_json;

/// {q, affine: [[x, y], ...], projective: [[x, y, z], ...]}. Points off the
/// affine part appear only in `projective`. Field elements are written as
/// integer codes (the residue for prime q).
ordered_json set_to_json(const ProjectivePlane& plane, const PointSet& set);

/// Reads either list (or both; the union is taken). q must match the plane.
PointSet set_from_json(const ProjectivePlane& plane, const ordered_json& j);

struct SpectrumMeta {
    std::string construction;
    std::string generator;
    std::uint64_t seed = 0;
    bool has_seed = false;
};

ordered_json spectrum_to_json(const SecantSpectrum& sp, const IdentityReport& checks, const BoundsReport& bounds,
                              const SpectrumMeta& meta = {});

ordered_json hypergraph_to_json(const LinearHypergraph& h);
LinearHypergraph hypergraph_from_json(const ordered_json& j);

/// {num_vertices, color: ["blue" | "red", ...]}
ordered_json coloring_to_json(const std::vector<Color>& color);
std::vector<Color> coloring_from_json(const ordered_json& j);

ordered_json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Two-space indent, trailing newline.
std::string dump(const ordered_json& j);

}  // namespace secant::io
