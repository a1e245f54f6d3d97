#include "zq/lagrangian.hpp"

#include <algorithm>
#include <array>

#include "zq/arith.hpp"

namespace zq {

namespace {

using Vec = std::vector<std::uint32_t>;

std::uint64_t dot_mod(const Vec& a, const Vec& b, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<std::uint64_t>(a[i]) * b[i] % p;
    return acc % p;
}

Vec combine(const std::vector<Vec>& basis, const std::vector<std::uint32_t>& coeff,
            std::uint32_t d, std::uint64_t p) {
    Vec v(d, 0);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        if (coeff[r] == 0) continue;
        for (std::uint32_t c = 0; c < d; ++c)
            v[c] = static_cast<std::uint32_t>((v[c] + static_cast<std::uint64_t>(coeff[r]) * basis[r][c]) % p);
    }
    return v;
}

// Enumerates coefficient tuples of `basis` in lexicographic order (last
// coordinate fastest) and returns the first combination satisfying pred.
template <typename Pred>
bool scan_span(const std::vector<Vec>& basis, std::uint32_t d, std::uint64_t p, Pred pred,
               Vec& out) {
    const std::size_t k = basis.size();
    std::vector<std::uint32_t> coeff(k, 0);
    const std::uint64_t total = checked_pow(p, static_cast<std::uint32_t>(k));
    for (std::uint64_t it = 1; it < total; ++it) {
        // increment little-endian on the last coefficient
        for (std::size_t pos = k; pos-- > 0;) {
            if (++coeff[pos] < p) break;
            coeff[pos] = 0;
        }
        Vec v = combine(basis, coeff, d, p);
        if (pred(v)) {
            out = std::move(v);
            return true;
        }
    }
    return false;
}

// Basis of {u in span(space) : u.v = 0 and u.w = 0} by Gaussian elimination
// on the coefficient space.
std::vector<Vec> orthogonal_complement(const std::vector<Vec>& space, const Vec& v, const Vec& w,
                                       std::uint32_t d, std::uint64_t p) {
    const std::size_t k = space.size();
    // Rows of the constraint matrix: (space_r . v, space_r . w).
    std::vector<std::array<std::uint64_t, 2>> rows(k);
    for (std::size_t r = 0; r < k; ++r) rows[r] = {dot_mod(space[r], v, p), dot_mod(space[r], w, p)};

    // Kernel of the k x 2 map over F_p via elimination on the transpose.
    // Work with the 2 x k matrix M[c][r] = rows[r][c].
    std::vector<std::vector<std::uint64_t>> m(2, std::vector<std::uint64_t>(k));
    for (std::size_t r = 0; r < k; ++r) {
        m[0][r] = rows[r][0];
        m[1][r] = rows[r][1];
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < 2; ++col) {
        std::size_t sel = rank;
        while (sel < 2 && m[sel][col] == 0) ++sel;
        if (sel == 2) continue;
        std::swap(m[rank], m[sel]);
        const std::uint64_t inv = inverse_mod(m[rank][col], p);
        for (std::size_t c = 0; c < k; ++c) m[rank][c] = m[rank][c] * inv % p;
        for (std::size_t rr = 0; rr < 2; ++rr) {
            if (rr == rank || m[rr][col] == 0) continue;
            const std::uint64_t f = m[rr][col];
            for (std::size_t c = 0; c < k; ++c)
                m[rr][c] = (m[rr][c] + p * p - f * m[rank][c] % p) % p;
        }
        pivots.push_back(col);
        ++rank;
    }

    std::vector<Vec> kernel;
    for (std::size_t free_col = 0; free_col < k; ++free_col) {
        if (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) continue;
        std::vector<std::uint32_t> coeff(k, 0);
        coeff[free_col] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            const std::uint64_t val = m[r][free_col];
            coeff[pivots[r]] = static_cast<std::uint32_t>((p - val) % p);
        }
        kernel.push_back(combine(space, coeff, d, p));
    }
    return kernel;
}

} // namespace

std::uint64_t LagrangianSubspace::size() const {
    return checked_pow(p, dim());
}

LagrangianSubspace find_lagrangian(std::uint64_t p, std::uint32_t d) {
    if (d < 3) throw InvalidRange("isotropic construction needs d >= 3");
    Modulus::odd_prime_power(p, 1); // validates p

    LagrangianSubspace L;
    L.p = p;
    L.dim_ambient = d;
    L.target_dim = (d % 2 == 1) ? (d - 1) / 2 : d / 2;

    // Current working space, initially all of F_p^d.
    std::vector<Vec> space;
    for (std::uint32_t i = 0; i < d; ++i) {
        Vec e(d, 0);
        e[i] = 1;
        space.push_back(e);
    }

    while (L.dim() < L.target_dim && space.size() >= 2) {
        Vec v;
        const bool found = scan_span(
            space, d, p, [&](const Vec& cand) { return dot_mod(cand, cand, p) == 0; }, v);
        if (!found) break; // anisotropic remainder

        Vec w;
        const bool paired = scan_span(
            space, d, p, [&](const Vec& cand) { return dot_mod(cand, v, p) != 0; }, w);
        if (!paired) break; // v is in the radical; cannot happen for a nondegenerate form

        L.basis.push_back(v);
        space = orthogonal_complement(space, v, w, d, p);
    }

    L.reached_target = L.dim() == L.target_dim;
    return L;
}

bool verify_totally_isotropic(const LagrangianSubspace& L) {
    const std::uint64_t p = L.p;
    const std::uint32_t k = L.dim();
    const std::uint64_t total = checked_pow(p, k);
    if (total * total > kPairCap) throw CapacityExceeded("isotropy check beyond pair cap");

    // Materialize the span, then test every ordered pair.
    std::vector<Vec> span;
    span.reserve(total);
    std::vector<std::uint32_t> coeff(k, 0);
    span.push_back(combine(L.basis, coeff, L.dim_ambient, p));
    for (std::uint64_t it = 1; it < total; ++it) {
        for (std::size_t pos = k; pos-- > 0;) {
            if (++coeff[pos] < p) break;
            coeff[pos] = 0;
        }
        span.push_back(combine(L.basis, coeff, L.dim_ambient, p));
    }
    for (const Vec& a : span)
        for (const Vec& b : span)
            if (dot_mod(a, b, p) != 0) return false;
    return true;
}

LiftedSet lift(const LagrangianSubspace& L, std::uint32_t ell) {
    const Modulus mod = Modulus::odd_prime_power(L.p, ell);
    const Grid grid(mod, L.dim_ambient);
    if (!grid.dense_ok()) throw CapacityExceeded("lift enumeration beyond dense cap");
    const std::uint64_t p = L.p;
    const std::uint64_t q = mod.q();
    const std::uint32_t d = L.dim_ambient;

    // Row-reduce the basis once; membership of a reduced point is tested by
    // elimination against the pivots.
    std::vector<Vec> rref = L.basis;
    std::vector<std::uint32_t> pivot_col;
    std::size_t rank = 0;
    for (std::uint32_t col = 0; col < d && rank < rref.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rref.size() && rref[sel][col] == 0) ++sel;
        if (sel == rref.size()) continue;
        std::swap(rref[rank], rref[sel]);
        const std::uint64_t inv = inverse_mod(rref[rank][col], p);
        for (std::uint32_t c = 0; c < d; ++c)
            rref[rank][c] = static_cast<std::uint32_t>(rref[rank][c] * inv % p);
        for (std::size_t r = 0; r < rref.size(); ++r) {
            if (r == rank || rref[r][col] == 0) continue;
            const std::uint64_t f = rref[r][col];
            for (std::uint32_t c = 0; c < d; ++c)
                rref[r][c] = static_cast<std::uint32_t>((rref[r][c] + p * p - f * rref[rank][c] % p) % p);
        }
        pivot_col.push_back(col);
        ++rank;
    }

    const auto member = [&](const std::array<std::uint32_t, kMaxDim>& x) {
        std::array<std::uint64_t, kMaxDim> red{};
        for (std::uint32_t c = 0; c < d; ++c) red[c] = x[c] % p;
        for (std::size_t r = 0; r < rank; ++r) {
            const std::uint64_t f = red[pivot_col[r]];
            if (f == 0) continue;
            for (std::uint32_t c = 0; c < d; ++c)
                red[c] = (red[c] + p * p - f * rref[r][c] % p) % p;
        }
        for (std::uint32_t c = 0; c < d; ++c)
            if (red[c] != 0) return false;
        return true;
    };

    std::vector<std::uint64_t> points;
    std::array<std::uint32_t, kMaxDim> x{};
    for (std::uint64_t idx = 0; idx < grid.cells(); ++idx) {
        grid.decode(idx, std::span<std::uint32_t>(x.data(), d));
        if (member(x)) points.push_back(idx);
    }
    (void)q;
    return LiftedSet{L, ell, PointSet(grid, std::move(points))};
}

SharpnessReport verify_sharpness(const LiftedSet& E) {
    const Modulus& mod = E.points.grid().mod();
    SharpnessReport rep;
    rep.expected_size =
        checked_pow(E.base.p, (E.ell - 1) * E.base.dim_ambient) * E.base.size();
    rep.actual_size = E.points.size();
    rep.sizes_ok = rep.expected_size == rep.actual_size;

    const std::vector<std::uint64_t> pi = dot_product_set(E.points);
    rep.pi_size = pi.size();
    rep.pi_size_cap = checked_pow(mod.p(), mod.ell() - 1);
    rep.pi_no_units = std::none_of(pi.begin(), pi.end(),
                                   [&](std::uint64_t v) { return mod.is_unit(v); });

    const std::vector<std::uint64_t> delta = distance_set(E.points);
    rep.delta_no_units = std::none_of(delta.begin(), delta.end(),
                                      [&](std::uint64_t v) { return mod.is_unit(v); });
    return rep;
}

} // namespace zq
