#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace secant {

/// Ordered edge list F_1..F_n (stored 0-based) over vertices [0, num_vertices).
struct LinearHypergraph {
    std::uint32_t n = 0;
    std::uint32_t num_vertices = 0;
    std::vector<std::vector<std::uint32_t>> edges;
};

/// Throws std::invalid_argument unless H has exactly n edges of size n,
/// in-range distinct vertices, and pairwise intersections of size <= 1.
void validate_hypergraph(const LinearHypergraph& h);

enum class GeneratorMode { Pairwise, Sunflower, Mixed };
std::string_view mode_name(GeneratorMode m) noexcept;
GeneratorMode parse_mode(std::string_view s);

struct GeneratorOptions {
    GeneratorMode mode = GeneratorMode::Pairwise;
    // probability that a pair of edges gets a shared vertex
    std::uint64_t pair_num = 1;
    std::uint64_t pair_den = 2;
};

LinearHypergraph generate_linear_hypergraph(std::uint32_t n, std::uint64_t seed, GeneratorOptions opts = {});

enum class Color : std::uint8_t { None = 0, Blue = 1, Red = 2 };

struct EdgeDiagnostics {
    std::uint32_t private_vertices = 0;  // |R_i|
    std::uint32_t captured = 0;          // |C_i|
    std::uint32_t disjoint = 0;          // |D_i|
    std::uint32_t recolors = 0;          // t_i
    std::uint32_t phase1_blue = 0;
};

struct LegitColoring {
    std::vector<Color> color;                 // per vertex
    std::vector<std::uint32_t> blue_counts;   // |F_i ∩ B|
    std::vector<std::uint32_t> targets;       // n - floor(i/2) for odd i, i/2 for even i (1-based i)
    std::vector<EdgeDiagnostics> diagnostics;
    // blue counts of every edge after each phase-2 step, when requested
    std::vector<std::vector<std::uint32_t>> trace;
};

/// Thrown when phase 2 cannot reach a target; cannot happen on valid input.
class ColoringInfeasible : public std::runtime_error {
public:
    ColoringInfeasible(std::uint32_t edge, EdgeDiagnostics diag, const std::string& what)
        : std::runtime_error(what), edge_(edge), diag_(diag) {}
    std::uint32_t edge() const noexcept { return edge_; }  // 1-based
    const EdgeDiagnostics& diagnostics() const noexcept { return diag_; }

private:
    std::uint32_t edge_;
    EdgeDiagnostics diag_;
};

std::vector<std::uint32_t> coloring_targets(std::uint32_t n);

/// Two-phase blue/red coloring in input edge order; recolors private
/// vertices lowest index first.
LegitColoring two_phase_coloring(const LinearHypergraph& h, bool record_trace = false);

struct LegitimacyResult {
    bool legitimate = false;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> violating_pair;  // 1-based edge indices
};

/// True iff the per-edge color multiplicity lists are pairwise distinct.
/// Throws std::invalid_argument on an uncolored vertex.
LegitimacyResult verify_legitimate(const LinearHypergraph& h, const std::vector<Color>& color,
                                   std::uint32_t num_colors = 2);

/// Permutes edge order with a seeded shuffle.
LinearHypergraph permute_edges(const LinearHypergraph& h, std::uint64_t seed);

}  // namespace secant
