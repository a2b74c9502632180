#include "secant/set_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace secant::io {

ordered_json set_to_json(const ProjectivePlane& plane, const PointSet& set) {
    const AffineFrame frame(plane);
    ordered_json j;
    j["q"] = plane.q();
    ordered_json affine = ordered_json::array();
    ordered_json proj = ordered_json::array();
    for (PointIndex p : set.members()) {
        const Triple t = plane.point(p);
        proj.push_back({t.x, t.y, t.z});
        if (auto c = frame.coords(p)) affine.push_back({(*c)[0], (*c)[1]});
    }
    j["affine"] = std::move(affine);
    j["projective"] = std::move(proj);
    return j;
}

PointSet set_from_json(const ProjectivePlane& plane, const ordered_json& j) {
    if (!j.contains("q") || j.at("q").get<std::uint32_t>() != plane.q())
        throw std::invalid_argument("set file: q does not match");
    const AffineFrame frame(plane);
    const std::uint32_t q = plane.q();
    auto elem = [q](const ordered_json& v) {
        const auto e = v.get<std::int64_t>();
        if (e < 0 || e >= static_cast<std::int64_t>(q)) throw std::invalid_argument("set file: coordinate out of range");
        return static_cast<Elem>(e);
    };
    PointSet s(plane);
    if (j.contains("affine"))
        for (const auto& pt : j.at("affine")) {
            if (pt.size() != 2) throw std::invalid_argument("set file: affine points need 2 coordinates");
            s.insert(frame.point(elem(pt[0]), elem(pt[1])));
        }
    if (j.contains("projective"))
        for (const auto& pt : j.at("projective")) {
            if (pt.size() != 3) throw std::invalid_argument("set file: projective points need 3 coordinates");
            s.insert(plane.point_index({elem(pt[0]), elem(pt[1]), elem(pt[2])}));
        }
    return s;
}

ordered_json spectrum_to_json(const SecantSpectrum& sp, const IdentityReport& checks, const BoundsReport& bounds,
                              const SpectrumMeta& meta) {
    ordered_json j;
    j["q"] = sp.q;
    j["N"] = sp.lines;
    j["set_size"] = sp.set_size;
    ordered_json hist = ordered_json::array();
    for (std::size_t k = 0; k < sp.histogram.size(); ++k) hist.push_back({{"k", k}, {"count", sp.histogram[k]}});
    j["histogram"] = std::move(hist);
    j["mode_k"] = sp.mode_k;
    j["mode_count"] = sp.mode_count;
    j["checks"] = {{"eq1", checks.eq1}, {"eq2", checks.eq2}, {"var", checks.var}};
    j["bounds"] = {{"prop", bounds.prop_bound},
                   {"cor", bounds.cor_bound},
                   {"cor_ceiling", bounds.cor_ceiling},
                   {"thm_lower", bounds.thm_lower}};
    if (!meta.construction.empty()) j["construction"] = meta.construction;
    if (!meta.generator.empty()) j["generator"] = meta.generator;
    if (meta.has_seed) j["seed"] = meta.seed;
    return j;
}

ordered_json hypergraph_to_json(const LinearHypergraph& h) {
    return {{"n", h.n}, {"num_vertices", h.num_vertices}, {"edges", h.edges}};
}

LinearHypergraph hypergraph_from_json(const ordered_json& j) {
    LinearHypergraph h;
    h.n = j.at("n").get<std::uint32_t>();
    h.num_vertices = j.at("num_vertices").get<std::uint32_t>();
    h.edges = j.at("edges").get<std::vector<std::vector<std::uint32_t>>>();
    validate_hypergraph(h);
    return h;
}

ordered_json coloring_to_json(const std::vector<Color>& color) {
    ordered_json arr = ordered_json::array();
    for (Color c : color) arr.push_back(c == Color::Blue ? "blue" : c == Color::Red ? "red" : "none");
    return {{"num_vertices", color.size()}, {"color", std::move(arr)}};
}

std::vector<Color> coloring_from_json(const ordered_json& j) {
    std::vector<Color> out;
    for (const auto& c : j.at("color")) {
        const auto s = c.get<std::string>();
        if (s == "blue")
            out.push_back(Color::Blue);
        else if (s == "red")
            out.push_back(Color::Red);
        else if (s == "none")
            out.push_back(Color::None);
        else
            throw std::invalid_argument("coloring: unknown color " + s);
    }
    if (j.contains("num_vertices") && j.at("num_vertices").get<std::size_t>() != out.size())
        throw std::invalid_argument("coloring: num_vertices does not match color list");
    return out;
}

ordered_json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return ordered_json::parse(in);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace secant::io
