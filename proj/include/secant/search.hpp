#pragma once

#include <cstdint>
#include <string_view>

#include "secant/plane.hpp"
#include "secant/point_set.hpp"

namespace secant {

enum class SearchMethod { Exhaustive, Local };
std::string_view method_name(SearchMethod m) noexcept;

/// min over point sets of max_k L_k, or the best value a heuristic found.
struct SearchResult {
    std::uint32_t q = 0;
    std::uint32_t best_mode_count = 0;
    PointSet witness;
    std::uint64_t subsets_examined = 0;
    SearchMethod method = SearchMethod::Exhaustive;
};

/// Exact minimum over all subsets with |S| <= N/2 (complements have the
/// reversed histogram, so nothing is lost). q must be 2, 3 or 4. The witness
/// is the attaining set whose bitmap, read as an integer with point i at bit
/// i, is smallest. The subset space is split by its high-order bits and
/// reduced in prefix order, so any thread count gives the same answer.
SearchResult exhaustive_minmax(const ProjectivePlane& plane, unsigned threads = 1);

struct LocalSearchOptions {
    std::uint64_t iters = 4000;   // flip proposals per restart
    std::uint64_t seed = 1;
    std::uint32_t restarts = 32;
    unsigned threads = 1;
};

/// Random-restart descent over single-point flips. A flip is kept when it
/// does not increase (mode_count, sum_k L_k^2) in lexicographic order; the
/// second key is the histogram's spread, which breaks plateaus of equal mode
/// count. Best over restarts, earliest restart on ties.
SearchResult local_search(const ProjectivePlane& plane, const LocalSearchOptions& opts);

}  // namespace secant
