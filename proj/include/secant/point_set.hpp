#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "secant/plane.hpp"

namespace secant {

/// Membership bitmap over the point indices of one plane.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::uint32_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    explicit PointSet(const ProjectivePlane& plane) : PointSet(plane.size()) {}

    static PointSet full(std::uint32_t universe);

    std::uint32_t universe() const noexcept { return universe_; }
    std::uint32_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(PointIndex i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
    void insert(PointIndex i) noexcept;
    void erase(PointIndex i) noexcept;
    void flip(PointIndex i) noexcept;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::vector<PointIndex> members() const;

    /// Bitwise complement within the universe.
    PointSet complement() const;

    /// Recounts the bitmap; equals size() whenever the invariant holds.
    std::uint32_t popcount() const noexcept;

    friend bool operator==(const PointSet& a, const PointSet& b) noexcept {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    std::uint32_t universe_ = 0;
    std::uint32_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

PointSet complement(const PointSet& s);

}  // namespace secant
