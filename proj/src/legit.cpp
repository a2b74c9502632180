#include "secant/legit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "secant/rng.hpp"

namespace secant {

void validate_hypergraph(const LinearHypergraph& h) {
    if (h.n < 1) throw std::invalid_argument("hypergraph needs n >= 1");
    if (h.edges.size() != h.n) throw std::invalid_argument("expected exactly n edges");
    std::vector<std::vector<std::uint32_t>> incidence(h.num_vertices);
    for (std::uint32_t i = 0; i < h.n; ++i) {
        const auto& e = h.edges[i];
        if (e.size() != h.n)
            throw std::invalid_argument("edge " + std::to_string(i + 1) + " does not have exactly n vertices");
        std::vector<std::uint32_t> sorted = e;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("edge " + std::to_string(i + 1) + " repeats a vertex");
        for (std::uint32_t v : e) {
            if (v >= h.num_vertices) throw std::invalid_argument("vertex index out of range");
            incidence[v].push_back(i);
        }
    }
    // linear: no pair of edges shares two vertices
    std::vector<std::uint32_t> meet(static_cast<std::size_t>(h.n) * h.n, 0);
    for (const auto& edges : incidence)
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = a + 1; b < edges.size(); ++b)
                if (++meet[static_cast<std::size_t>(edges[a]) * h.n + edges[b]] > 1)
                    throw std::invalid_argument("edges " + std::to_string(edges[a] + 1) + " and " +
                                                std::to_string(edges[b] + 1) + " share more than one vertex");
}

std::string_view mode_name(GeneratorMode m) noexcept {
    switch (m) {
        case GeneratorMode::Sunflower: return "sunflower";
        case GeneratorMode::Mixed: return "mixed";
        case GeneratorMode::Pairwise: break;
    }
    return "pairwise";
}

GeneratorMode parse_mode(std::string_view s) {
    if (s == "pairwise") return GeneratorMode::Pairwise;
    if (s == "sunflower") return GeneratorMode::Sunflower;
    if (s == "mixed") return GeneratorMode::Mixed;
    throw std::invalid_argument("unknown generator mode: " + std::string(s));
}

namespace {

struct Builder {
    std::uint32_t n;
    std::vector<std::vector<std::uint32_t>> edges;
    std::vector<std::uint8_t> met;  // n x n
    std::uint32_t next_vertex = 0;

    explicit Builder(std::uint32_t n_) : n(n_), edges(n_), met(static_cast<std::size_t>(n_) * n_, 0) {}

    bool has_room(std::uint32_t e) const { return edges[e].size() < n; }
    bool meets(std::uint32_t a, std::uint32_t b) const { return met[static_cast<std::size_t>(a) * n + b] != 0; }

    // Adds one vertex shared by all edges in `group` if linearity and capacity allow.
    bool share(const std::vector<std::uint32_t>& group) {
        for (std::size_t a = 0; a < group.size(); ++a) {
            if (!has_room(group[a])) return false;
            for (std::size_t b = a + 1; b < group.size(); ++b)
                if (meets(group[a], group[b])) return false;
        }
        const std::uint32_t v = next_vertex++;
        for (std::size_t a = 0; a < group.size(); ++a) {
            edges[group[a]].push_back(v);
            for (std::size_t b = 0; b < group.size(); ++b)
                if (a != b) met[static_cast<std::size_t>(group[a]) * n + group[b]] = 1;
        }
        return true;
    }

    void try_sunflower(SplitMix64& rng) {
        if (n < 3) return;
        const std::uint32_t kmax = std::min<std::uint32_t>(n, 5);
        const std::uint32_t k = 3 + static_cast<std::uint32_t>(rng.below(kmax - 2));
        std::vector<std::uint32_t> order(n);
        std::iota(order.begin(), order.end(), 0u);
        for (std::uint32_t i = 0; i < k; ++i) std::swap(order[i], order[i + rng.below(n - i)]);
        order.resize(k);
        std::sort(order.begin(), order.end());
        share(order);
    }

    void pairwise(SplitMix64& rng, std::uint64_t num, std::uint64_t den) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                if (rng.coin(num, den)) share({i, j});
    }

    void fill() {
        for (auto& e : edges)
            while (e.size() < n) e.push_back(next_vertex++);
    }
};

}  // namespace

LinearHypergraph generate_linear_hypergraph(std::uint32_t n, std::uint64_t seed, GeneratorOptions opts) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    SplitMix64 rng(seed);
    Builder b(n);
    switch (opts.mode) {
        case GeneratorMode::Pairwise:
            b.pairwise(rng, opts.pair_num, opts.pair_den);
            break;
        case GeneratorMode::Sunflower: {
            const std::uint64_t petals = n < 3 ? 0 : 1 + rng.below(n);
            for (std::uint64_t r = 0; r < petals; ++r) b.try_sunflower(rng);
            b.pairwise(rng, opts.pair_num, opts.pair_den);
            break;
        }
        case GeneratorMode::Mixed: {
            // random density, interleaved multi-edge and pair vertices
            static constexpr std::uint64_t kNums[] = {0, 1, 2, 3, 4};
            const std::uint64_t num = kNums[rng.below(5)];
            const std::uint64_t rounds = static_cast<std::uint64_t>(n) * n;
            for (std::uint64_t r = 0; r < rounds; ++r) {
                if (n >= 3 && rng.below(4) == 0) {
                    b.try_sunflower(rng);
                } else if (n >= 2) {
                    const auto i = static_cast<std::uint32_t>(rng.below(n));
                    const auto j = static_cast<std::uint32_t>(rng.below(n));
                    if (i != j && rng.coin(num, 4)) b.share({std::min(i, j), std::max(i, j)});
                }
            }
            break;
        }
    }
    b.fill();

    LinearHypergraph h;
    h.n = n;
    h.num_vertices = b.next_vertex;
    h.edges = std::move(b.edges);
    if (opts.mode == GeneratorMode::Mixed) {
        // relabel vertices and shuffle edge order
        std::vector<std::uint32_t> label(h.num_vertices);
        std::iota(label.begin(), label.end(), 0u);
        for (std::uint32_t i = h.num_vertices; i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);
        for (auto& e : h.edges)
            for (auto& v : e) v = label[v];
        for (std::uint32_t i = n; i > 1; --i) std::swap(h.edges[i - 1], h.edges[rng.below(i)]);
    }
    for (auto& e : h.edges) std::sort(e.begin(), e.end());
    return h;
}

std::vector<std::uint32_t> coloring_targets(std::uint32_t n) {
    std::vector<std::uint32_t> t(n);
    for (std::uint32_t i = 1; i <= n; ++i) t[i - 1] = (i % 2 == 1) ? n - i / 2 : i / 2;
    return t;
}

LegitColoring two_phase_coloring(const LinearHypergraph& h, bool record_trace) {
    validate_hypergraph(h);
    const std::uint32_t n = h.n;
    LegitColoring out;
    out.color.assign(h.num_vertices, Color::None);
    out.targets = coloring_targets(n);
    out.diagnostics.resize(n);

    std::vector<std::vector<std::uint32_t>> incidence(h.num_vertices);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t v : h.edges[i]) incidence[v].push_back(i);
    std::vector<std::uint32_t> first_edge(h.num_vertices, n);
    for (std::uint32_t v = 0; v < h.num_vertices; ++v)
        if (!incidence[v].empty()) first_edge[v] = incidence[v].front();

    auto blue_of = [&](std::uint32_t i) {
        std::uint32_t c = 0;
        for (std::uint32_t v : h.edges[i]) c += out.color[v] == Color::Blue;
        return c;
    };

    // Phase 1: 0-based index i is edge F_{i+1}; odd F get blue.
    for (std::uint32_t i = 0; i < n; ++i) {
        const Color c = (i % 2 == 0) ? Color::Blue : Color::Red;
        for (std::uint32_t v : h.edges[i])
            if (out.color[v] == Color::None) out.color[v] = c;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t idx = i + 1;
        const std::uint32_t blue = blue_of(i);
        out.diagnostics[i].phase1_blue = blue;
        const bool ok = (idx % 2 == 1) ? blue >= n - idx / 2 : blue <= idx / 2;
        if (!ok) throw std::logic_error("phase-1 bound violated at edge " + std::to_string(idx));
    }

    // Diagnostics R_i, C_i, D_i.
    std::vector<std::uint32_t> stamp(n, UINT32_MAX);
    for (std::uint32_t i = 0; i < n; ++i) {
        EdgeDiagnostics& d = out.diagnostics[i];
        std::uint32_t meeting = 0;
        for (std::uint32_t v : h.edges[i]) {
            if (incidence[v].size() == 1) ++d.private_vertices;
            for (std::uint32_t j : incidence[v]) {
                if (j == i || stamp[j] == i) continue;
                stamp[j] = i;
                ++meeting;
                // F_j captured w.r.t. F_i: the shared vertex already lies in an earlier F_k, k < j
                if (j < i && first_edge[v] < j) ++d.captured;
            }
        }
        d.disjoint = n - 1 - meeting;
        if (d.private_vertices < d.captured + d.disjoint + 1)
            throw ColoringInfeasible(i + 1, d, "feasibility inequality fails at edge " + std::to_string(i + 1));
    }

    // Phase 2: fix edges in order by recoloring private vertices only.
    for (std::uint32_t i = 0; i < n; ++i) {
        EdgeDiagnostics& d = out.diagnostics[i];
        const std::uint32_t blue = blue_of(i);
        const std::uint32_t target = out.targets[i];
        const bool odd = (i % 2 == 0);
        Color from = odd ? Color::Blue : Color::Red;
        Color to = odd ? Color::Red : Color::Blue;
        std::uint32_t need = 0;
        if (odd) {
            if (blue < target) throw ColoringInfeasible(i + 1, d, "odd edge below its blue target");
            need = blue - target;
        } else {
            if (blue > target) throw ColoringInfeasible(i + 1, d, "even edge above its blue target");
            need = target - blue;
        }
        d.recolors = need;
        for (std::uint32_t v : h.edges[i]) {  // edges are sorted, so lowest index first
            if (need == 0) break;
            if (incidence[v].size() == 1 && out.color[v] == from) {
                out.color[v] = to;
                --need;
            }
        }
        if (need != 0)
            throw ColoringInfeasible(i + 1, d, "not enough private vertices at edge " + std::to_string(i + 1));
        if (record_trace) {
            std::vector<std::uint32_t> snap(n);
            for (std::uint32_t j = 0; j < n; ++j) snap[j] = blue_of(j);
            out.trace.push_back(std::move(snap));
        }
    }

    out.blue_counts.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) out.blue_counts[i] = blue_of(i);
    return out;
}

LegitimacyResult verify_legitimate(const LinearHypergraph& h, const std::vector<Color>& color,
                                   std::uint32_t num_colors) {
    if (num_colors != 2) throw std::invalid_argument("only blue/red colorings are supported");
    if (color.size() < h.num_vertices) throw std::invalid_argument("coloring shorter than the vertex set");
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> seen;
    LegitimacyResult r;
    r.legitimate = true;
    for (std::uint32_t i = 0; i < h.edges.size(); ++i) {
        std::uint32_t blue = 0, red = 0;
        for (std::uint32_t v : h.edges[i]) {
            if (v >= color.size() || color[v] == Color::None)
                throw std::invalid_argument("uncolored vertex " + std::to_string(v));
            (color[v] == Color::Blue ? blue : red)++;
        }
        const auto [it, inserted] = seen.emplace(std::make_pair(blue, red), i + 1);
        if (!inserted && r.legitimate) {
            r.legitimate = false;
            r.violating_pair = std::make_pair(it->second, i + 1);
        }
    }
    return r;
}

LinearHypergraph permute_edges(const LinearHypergraph& h, std::uint64_t seed) {
    LinearHypergraph out = h;
    SplitMix64 rng(seed);
    for (std::size_t i = out.edges.size(); i > 1; --i) std::swap(out.edges[i - 1], out.edges[rng.below(i)]);
    return out;
}

}  // namespace secant
