#pragma once

//
// A finite subset E of Z_q^d, stored as sorted unique linear indices with
// an on-demand dense indicator view.
//

#include <cstdint>
#include <span>
#include <vector>

#include "zq/grid.hpp"
#include "zq/rng.hpp"

namespace zq {

class PointSet {
public:
    PointSet(const Grid& grid, std::vector<std::uint64_t> indices);

    // k points drawn uniformly without replacement (SplitMix64, see rng.hpp).
    static PointSet random(const Grid& grid, std::size_t k, std::uint64_t seed);
    static PointSet full(const Grid& grid);

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return idx_.size(); }
    std::span<const std::uint64_t> indices() const { return idx_; }

    // Coordinates of all points, flattened point-major: d values per point.
    std::vector<std::uint32_t> coords_flat() const;

    // Dense 0/1 view; throws CapacityExceeded beyond the dense cell cap.
    std::vector<std::uint8_t> indicator() const;

    PointSet translated(std::span<const std::uint32_t> v) const;
    PointSet scaled(std::uint64_t u) const;

private:
    Grid grid_;
    std::vector<std::uint64_t> idx_;
};

} // namespace zq
