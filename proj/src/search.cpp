#include "secant/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "secant/parallel.hpp"
#include "secant/rng.hpp"
#include "secant/simd/kernels.hpp"
#include "secant/spectrum.hpp"

namespace secant {

std::string_view method_name(SearchMethod m) noexcept {
    return m == SearchMethod::Local ? "local" : "exhaustive";
}

namespace {

struct PartBest {
    std::uint32_t best = UINT32_MAX;
    std::uint32_t mask = 0;
    std::uint64_t examined = 0;
};

}  // namespace

SearchResult exhaustive_minmax(const ProjectivePlane& plane, unsigned threads) {
    const std::uint32_t q = plane.q();
    if (q > 4) throw std::invalid_argument("exhaustive limit");
    const std::uint32_t n = plane.size();  // <= 21
    std::vector<std::uint32_t> line_masks(n, 0);
    for (LineIndex l = 0; l < n; ++l)
        for (PointIndex pt : plane.line_points(l)) line_masks[l] |= 1u << pt;

    const std::uint32_t half = (n - 1) / 2;  // N is odd
    constexpr std::uint32_t kPrefixBits = 4;
    const std::uint32_t parts = 1u << kPrefixBits;
    const std::uint32_t low_bits = n - kPrefixBits;
    std::vector<PartBest> results(parts);
    const auto& k = simd::kernels();

    parallel_for(threads, parts, [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint8_t> counts(n);
        std::vector<std::uint32_t> hist(q + 2);
        for (std::size_t part = begin; part < end; ++part) {
            PartBest pb;
            const std::uint32_t base = static_cast<std::uint32_t>(part) << low_bits;
            for (std::uint32_t low = 0; low < (1u << low_bits); ++low) {
                const std::uint32_t mask = base | low;
                if (static_cast<std::uint32_t>(std::popcount(mask)) > half) continue;
                ++pb.examined;
                k.mask_counts(line_masks.data(), n, mask, counts.data());
                std::fill(hist.begin(), hist.end(), 0);
                std::uint32_t m = 0;
                for (std::uint32_t l = 0; l < n; ++l) m = std::max(m, ++hist[counts[l]]);
                if (m < pb.best) {
                    pb.best = m;
                    pb.mask = mask;
                }
            }
            results[part] = pb;
        }
    });

    PartBest total;
    for (const PartBest& pb : results) {
        total.examined += pb.examined;
        if (pb.best < total.best) {
            total.best = pb.best;
            total.mask = pb.mask;
        }
    }
    SearchResult r;
    r.q = q;
    r.best_mode_count = total.best;
    r.subsets_examined = total.examined;
    r.method = SearchMethod::Exhaustive;
    r.witness = PointSet(plane);
    for (PointIndex i = 0; i < n; ++i)
        if ((total.mask >> i) & 1u) r.witness.insert(i);
    record_lower_bound(q, r.best_mode_count);
    return r;
}

namespace {

struct Score {
    std::uint32_t mode = 0;
    std::uint64_t spread = 0;  // sum_k L_k^2
    friend bool operator<=(const Score& a, const Score& b) {
        return a.mode < b.mode || (a.mode == b.mode && a.spread <= b.spread);
    }
};

class FlipState {
public:
    FlipState(const ProjectivePlane& plane, PointSet set)
        : plane_(plane), set_(std::move(set)), hist_(plane.q() + 2, 0) {
        counts_ = secant_sizes(plane, set_);
        for (std::uint32_t c : counts_) ++hist_[c];
        if (!plane.has_incidence_lists()) {
            lines_of_.resize(plane.size());
            for (PointIndex p = 0; p < plane.size(); ++p) lines_of_[p] = plane.point_lines(p);
        }
    }

    Score score() const {
        Score s;
        for (std::uint32_t h : hist_) {
            s.mode = std::max(s.mode, h);
            s.spread += static_cast<std::uint64_t>(h) * h;
        }
        return s;
    }

    void flip(PointIndex p) {
        const bool add = !set_.contains(p);
        set_.flip(p);
        auto apply = [&](LineIndex l) {
            --hist_[counts_[l]];
            counts_[l] = add ? counts_[l] + 1 : counts_[l] - 1;
            ++hist_[counts_[l]];
        };
        if (plane_.has_incidence_lists())
            for (LineIndex l : plane_.point_lines_view(p)) apply(l);
        else
            for (LineIndex l : lines_of_[p]) apply(l);
    }

    const PointSet& set() const noexcept { return set_; }

private:
    const ProjectivePlane& plane_;
    PointSet set_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::uint32_t> hist_;
    std::vector<std::vector<LineIndex>> lines_of_;
};

struct RestartResult {
    std::uint32_t best = UINT32_MAX;
    PointSet witness;
    std::uint64_t examined = 0;
};

}  // namespace

SearchResult local_search(const ProjectivePlane& plane, const LocalSearchOptions& opts) {
    const std::uint32_t n = plane.size();
    const std::uint32_t restarts = std::max<std::uint32_t>(opts.restarts, 1);
    std::vector<RestartResult> per(restarts);

    parallel_for(opts.threads, restarts, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            SplitMix64 rng(splitmix64(opts.seed) + r);
            PointSet start(plane);
            for (PointIndex i = 0; i < n; ++i)
                if (rng.coin(1, 2)) start.insert(i);
            FlipState st(plane, std::move(start));
            Score cur = st.score();
            RestartResult rr;
            rr.best = cur.mode;
            rr.witness = st.set();
            for (std::uint64_t it = 0; it < opts.iters; ++it) {
                const auto p = static_cast<PointIndex>(rng.below(n));
                st.flip(p);
                ++rr.examined;
                const Score next = st.score();
                if (next <= cur) {
                    cur = next;
                    if (cur.mode < rr.best) {
                        rr.best = cur.mode;
                        rr.witness = st.set();
                    }
                } else {
                    st.flip(p);
                }
            }
            per[r] = std::move(rr);
        }
    });

    SearchResult res;
    res.q = plane.q();
    res.method = SearchMethod::Local;
    res.best_mode_count = UINT32_MAX;
    for (auto& rr : per) {
        res.subsets_examined += rr.examined;
        if (rr.best < res.best_mode_count) {
            res.best_mode_count = rr.best;
            res.witness = rr.witness;
        }
    }
    record_lower_bound(res.q, res.best_mode_count);
    return res;
}

}  // namespace secant
