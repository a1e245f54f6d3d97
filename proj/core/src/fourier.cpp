#include "zq/fourier.hpp"

#include "zq/char_sums.hpp"
#include "zq/parallel.hpp"

namespace zq {

GridFunction::GridFunction(const Grid& grid) : grid_(grid) {
    if (!grid.dense_ok()) throw CapacityExceeded("grid function beyond dense cap");
    v_.assign(grid.cells(), cdouble(0, 0));
}

GridFunction::GridFunction(const Grid& grid, std::vector<cdouble> values) : grid_(grid) {
    if (!grid.dense_ok()) throw CapacityExceeded("grid function beyond dense cap");
    if (values.size() != grid.cells()) throw ShapeMismatch("value array size != q^d");
    v_ = std::move(values);
}

GridFunction GridFunction::indicator(const PointSet& set) {
    GridFunction f(set.grid());
    for (std::uint64_t i : set.indices()) f.v_[i] = cdouble(1, 0);
    return f;
}

namespace {

// One separable pass along `axis`: out[.., k, ..] = sum_x W[k, x] in[.., x, ..].
void axis_pass(const Grid& grid, std::uint32_t axis, const std::vector<cdouble>& mat,
               const std::vector<cdouble>& in, std::vector<cdouble>& out) {
    const std::uint64_t q = grid.mod().q();
    std::uint64_t inner = 1;
    for (std::uint32_t i = 0; i < axis; ++i) inner *= q;
    const std::uint64_t outer = grid.cells() / (inner * q);

    parallel_for(outer, [&](std::uint64_t o_begin, std::uint64_t o_end) {
        for (std::uint64_t o = o_begin; o < o_end; ++o) {
            const std::uint64_t base = o * q * inner;
            for (std::uint64_t k = 0; k < q; ++k) {
                cdouble* dst = out.data() + base + k * inner;
                for (std::uint64_t i = 0; i < inner; ++i) dst[i] = cdouble(0, 0);
                const cdouble* wrow = mat.data() + k * q;
                for (std::uint64_t x = 0; x < q; ++x) {
                    const cdouble w = wrow[x];
                    const cdouble* src = in.data() + base + x * inner;
                    for (std::uint64_t i = 0; i < inner; ++i) dst[i] += w * src[i];
                }
            }
        }
    });
}

GridFunction transform(const GridFunction& f, bool forward) {
    const Grid& grid = f.grid();
    const std::uint64_t q = grid.mod().q();
    const UnitRoots w(q);

    std::vector<cdouble> mat(q * q);
    for (std::uint64_t k = 0; k < q; ++k)
        for (std::uint64_t x = 0; x < q; ++x) {
            const std::uint64_t e = k * x % q;
            mat[k * q + x] = forward ? w[(q - e) % q] : w[e];
        }

    std::vector<cdouble> cur(f.values().begin(), f.values().end());
    std::vector<cdouble> nxt(cur.size());
    for (std::uint32_t axis = 0; axis < grid.dim(); ++axis) {
        axis_pass(grid, axis, mat, cur, nxt);
        std::swap(cur, nxt);
    }

    if (forward) {
        const double scale = 1.0 / static_cast<double>(grid.cells());
        parallel_for(cur.size(), [&](std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t i = b; i < e; ++i) cur[i] *= scale;
        });
    }
    return GridFunction(grid, std::move(cur));
}

} // namespace

GridFunction fourier_forward(const GridFunction& f) { return transform(f, true); }

GridFunction fourier_inverse(const GridFunction& coeffs) { return transform(coeffs, false); }

std::pair<cdouble, cdouble> plancherel_check(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid() == g.grid())) throw ShapeMismatch("plancherel_check shapes differ");
    cdouble lhs = 0;
    for (std::uint64_t i = 0; i < f.size(); ++i) lhs += f[i] * std::conj(g[i]);
    lhs /= static_cast<double>(f.grid().cells());

    const GridFunction fh = fourier_forward(f);
    const GridFunction gh = fourier_forward(g);
    cdouble rhs = 0;
    for (std::uint64_t i = 0; i < fh.size(); ++i) rhs += fh[i] * std::conj(gh[i]);
    return {lhs, rhs};
}

cdouble orthogonality_check(const Grid& grid, std::span<const std::uint32_t> m) {
    if (m.size() != grid.dim()) throw ShapeMismatch("frequency dimension mismatch");
    const std::uint64_t q = grid.mod().q();
    const UnitRoots w(q);
    if (!grid.dense_ok()) throw CapacityExceeded("orthogonality sweep beyond dense cap");
    cdouble acc = 0;
    std::array<std::uint32_t, kMaxDim> x{};
    for (std::uint64_t idx = 0; idx < grid.cells(); ++idx) {
        grid.decode(idx, std::span<std::uint32_t>(x.data(), grid.dim()));
        std::uint64_t dot = 0;
        for (std::uint32_t i = 0; i < grid.dim(); ++i) dot += static_cast<std::uint64_t>(x[i]) * m[i] % q;
        acc += w[dot % q];
    }
    return acc / static_cast<double>(grid.cells());
}

} // namespace zq
