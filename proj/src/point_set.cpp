#include "secant/point_set.hpp"

#include <bit>

namespace secant {

PointSet PointSet::full(std::uint32_t universe) {
    PointSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    s.count_ = universe;
    return s;
}

void PointSet::insert(PointIndex i) noexcept {
    if (!contains(i)) {
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
        ++count_;
    }
}

void PointSet::erase(PointIndex i) noexcept {
    if (contains(i)) {
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
        --count_;
    }
}

void PointSet::flip(PointIndex i) noexcept {
    if (contains(i))
        erase(i);
    else
        insert(i);
}

std::vector<PointIndex> PointSet::members() const {
    std::vector<PointIndex> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(static_cast<PointIndex>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

PointSet PointSet::complement() const {
    PointSet out = full(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
    out.count_ = universe_ - count_;
    return out;
}

std::uint32_t PointSet::popcount() const noexcept {
    std::uint32_t c = 0;
    for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
}

PointSet complement(const PointSet& s) { return s.complement(); }

}  // namespace secant
