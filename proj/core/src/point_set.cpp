#include "zq/point_set.hpp"

#include <algorithm>

namespace zq {

PointSet::PointSet(const Grid& grid, std::vector<std::uint64_t> indices)
    : grid_(grid), idx_(std::move(indices)) {
    for (std::uint64_t i : idx_)
        if (i >= grid_.cells()) throw InvalidRange("point index outside the grid");
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

PointSet PointSet::random(const Grid& grid, std::size_t k, std::uint64_t seed) {
    return PointSet(grid, sample_distinct(grid.cells(), k, seed));
}

PointSet PointSet::full(const Grid& grid) {
    if (!grid.dense_ok()) throw CapacityExceeded("full point set beyond dense cap");
    std::vector<std::uint64_t> all(grid.cells());
    for (std::uint64_t i = 0; i < grid.cells(); ++i) all[i] = i;
    return PointSet(grid, std::move(all));
}

std::vector<std::uint32_t> PointSet::coords_flat() const {
    std::vector<std::uint32_t> out(idx_.size() * grid_.dim());
    for (std::size_t i = 0; i < idx_.size(); ++i)
        grid_.decode(idx_[i], std::span<std::uint32_t>(out.data() + i * grid_.dim(), grid_.dim()));
    return out;
}

std::vector<std::uint8_t> PointSet::indicator() const {
    if (!grid_.dense_ok()) throw CapacityExceeded("indicator beyond dense cap");
    std::vector<std::uint8_t> ind(grid_.cells(), 0);
    for (std::uint64_t i : idx_) ind[i] = 1;
    return ind;
}

PointSet PointSet::translated(std::span<const std::uint32_t> v) const {
    if (v.size() != grid_.dim()) throw ShapeMismatch("translation vector dimension");
    const std::uint64_t q = grid_.mod().q();
    std::vector<std::uint64_t> moved;
    moved.reserve(idx_.size());
    std::array<std::uint32_t, kMaxDim> x{};
    for (std::uint64_t i : idx_) {
        grid_.decode(i, std::span<std::uint32_t>(x.data(), grid_.dim()));
        for (std::uint32_t c = 0; c < grid_.dim(); ++c)
            x[c] = static_cast<std::uint32_t>((x[c] + v[c]) % q);
        moved.push_back(grid_.index(std::span<const std::uint32_t>(x.data(), grid_.dim())));
    }
    return PointSet(grid_, std::move(moved));
}

PointSet PointSet::scaled(std::uint64_t u) const {
    const std::uint64_t q = grid_.mod().q();
    std::vector<std::uint64_t> moved;
    moved.reserve(idx_.size());
    std::array<std::uint32_t, kMaxDim> x{};
    for (std::uint64_t i : idx_) {
        grid_.decode(i, std::span<std::uint32_t>(x.data(), grid_.dim()));
        for (std::uint32_t c = 0; c < grid_.dim(); ++c)
            x[c] = static_cast<std::uint32_t>(x[c] * (u % q) % q);
        moved.push_back(grid_.index(std::span<const std::uint32_t>(x.data(), grid_.dim())));
    }
    return PointSet(grid_, std::move(moved));
}

} // namespace zq
