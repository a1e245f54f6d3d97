#pragma once

//
// Discrete Fourier analysis on Z_q^d with the averaged normalization:
//
//   fhat(m) = q^{-d} sum_x f(x) e(-x.m / q)
//   f(x)    = sum_m fhat(m) e(x.m / q)
//
// The transform runs as d separable one-dimensional passes; each pass is a
// dense q x q matrix application, exact to the definition. Output cells are
// computed independently, so results are identical for any worker count.
//

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zq/grid.hpp"
#include "zq/point_set.hpp"
#include "zq/tolerance.hpp"

namespace zq {

class GridFunction {
public:
    explicit GridFunction(const Grid& grid);
    GridFunction(const Grid& grid, std::vector<cdouble> values);

    static GridFunction indicator(const PointSet& set);

    const Grid& grid() const { return grid_; }
    std::uint64_t size() const { return static_cast<std::uint64_t>(v_.size()); }

    cdouble& operator[](std::uint64_t i) { return v_[i]; }
    const cdouble& operator[](std::uint64_t i) const { return v_[i]; }
    std::span<const cdouble> values() const { return v_; }
    std::span<cdouble> values() { return v_; }

    cdouble at(std::span<const std::uint32_t> x) const { return v_[grid_.index(x)]; }

private:
    Grid grid_;
    std::vector<cdouble> v_;
};

GridFunction fourier_forward(const GridFunction& f);
GridFunction fourier_inverse(const GridFunction& coeffs);

// Both sides of the Parseval identity
//   q^{-d} sum_x f(x) conj(g(x))  ==  sum_m fhat(m) conj(ghat(m)).
std::pair<cdouble, cdouble> plancherel_check(const GridFunction& f, const GridFunction& g);

// Literal evaluation of q^{-d} sum_x e(x.m / q): 1 at m = 0, else 0.
cdouble orthogonality_check(const Grid& grid, std::span<const std::uint32_t> m);

} // namespace zq
