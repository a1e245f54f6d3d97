#include "zq/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "zq/char_sums.hpp"
#include "zq/parallel.hpp"

namespace zq {

namespace {

// Histogram over ordered pairs of a per-coordinate invariant: table[a*q+b]
// holds the coordinate contribution and the per-pair value is the folded
// sum mod q. Covers both ||x-y|| and x.y.
std::vector<std::uint64_t> pair_histogram(const PointSet& E,
                                          const std::vector<std::uint32_t>& table) {
    const Grid& grid = E.grid();
    const std::uint64_t q = grid.mod().q();
    const std::uint32_t d = grid.dim();
    const std::size_t n = E.size();
    if (static_cast<std::uint64_t>(n) * n > kPairCap)
        throw CapacityExceeded("pair enumeration beyond the pair cap");

    const std::vector<std::uint32_t> coords = E.coords_flat();
    std::vector<std::uint64_t> hist(q, 0);
    std::mutex merge;
    parallel_for(n, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> local(q, 0);
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint32_t* xi = coords.data() + i * d;
            for (std::size_t k = 0; k < n; ++k) {
                const std::uint32_t* yk = coords.data() + k * d;
                std::uint64_t acc = 0;
                for (std::uint32_t c = 0; c < d; ++c) acc += table[xi[c] * q + yk[c]];
                ++local[acc % q];
            }
        }
        std::lock_guard<std::mutex> lock(merge);
        for (std::uint64_t v = 0; v < q; ++v) hist[v] += local[v];
    });
    return hist;
}

std::vector<std::uint32_t> distance_table(std::uint64_t q) {
    std::vector<std::uint32_t> table(q * q);
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b) {
            const std::uint64_t diff = (a + q - b) % q;
            table[a * q + b] = static_cast<std::uint32_t>(diff * diff % q);
        }
    return table;
}

std::vector<std::uint32_t> dot_table(std::uint64_t q) {
    std::vector<std::uint32_t> table(q * q);
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b)
            table[a * q + b] = static_cast<std::uint32_t>(a * b % q);
    return table;
}

std::vector<std::uint64_t> attained(const std::vector<std::uint64_t>& hist) {
    std::vector<std::uint64_t> vals;
    for (std::uint64_t v = 0; v < hist.size(); ++v)
        if (hist[v] > 0) vals.push_back(v);
    return vals;
}

// Adds pre * prod_{a <= axis} tabs[a][m_a] over the little-endian block of
// axes [0, axis]; dst spans q^{axis+1} cells, tabs rows are length q.
void add_rank1(const cdouble* tabs, std::uint32_t axis, std::uint64_t stride, cdouble pre,
               cdouble* dst, std::uint64_t q) {
    if (axis == 0) {
        for (std::uint64_t v = 0; v < q; ++v) dst[v] += pre * tabs[v];
        return;
    }
    const std::uint64_t sub = stride / q;
    const cdouble* row = tabs + static_cast<std::uint64_t>(axis) * q;
    for (std::uint64_t v = 0; v < q; ++v)
        add_rank1(tabs, axis - 1, sub, pre * row[v], dst + v * sub, q);
}

// |A(m)|^2 over the full frequency grid, A(m) = sum_{x in E} e(-x.m/q).
// Filled slab by slab along the last axis; within a slab the point loop and
// cell order are fixed, so the result is worker-count independent.
std::vector<double> raw_power_spectrum(const PointSet& E) {
    const Grid& grid = E.grid();
    if (!grid.dense_ok()) throw CapacityExceeded("power spectrum beyond dense cap");
    const std::uint64_t q = grid.mod().q();
    const std::uint32_t d = grid.dim();
    const std::size_t n = E.size();
    const UnitRoots w(q);

    // phase[k][axis][v] = e(-x_axis v / q) for point k.
    const std::vector<std::uint32_t> coords = E.coords_flat();
    std::vector<cdouble> phase(n * d * q);
    for (std::size_t k = 0; k < n; ++k)
        for (std::uint32_t axis = 0; axis < d; ++axis) {
            const std::uint64_t c = coords[k * d + axis];
            for (std::uint64_t v = 0; v < q; ++v)
                phase[(k * d + axis) * q + v] = w[(q - c * v % q) % q];
        }

    std::vector<cdouble> amp(grid.cells(), cdouble(0, 0));
    if (d == 1) {
        parallel_for(q, [&](std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t m = begin; m < end; ++m) {
                cdouble acc = 0;
                for (std::size_t k = 0; k < n; ++k) acc += phase[k * q + m];
                amp[m] = acc;
            }
        });
    } else {
        std::uint64_t slab = 1;
        for (std::uint32_t i = 0; i + 1 < d; ++i) slab *= q;
        parallel_for(q, [&](std::uint64_t c_begin, std::uint64_t c_end) {
            for (std::uint64_t c = c_begin; c < c_end; ++c) {
                cdouble* dst = amp.data() + c * slab;
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble* tabs = phase.data() + k * d * q;
                    add_rank1(tabs, d - 2, slab, tabs[(d - 1) * static_cast<std::uint64_t>(q) + c],
                              dst, q);
                }
            }
        });
    }

    std::vector<double> power(grid.cells());
    parallel_for(grid.cells(), [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t m = begin; m < end; ++m) power[m] = std::norm(amp[m]);
    });
    return power;
}

} // namespace

DistanceDecomposition decompose_distances(const PointSet& E, const IncidenceContext& ctx) {
    const Grid& grid = E.grid();
    const Modulus& mod = grid.mod();
    const std::uint64_t q = mod.q();
    const std::uint32_t d = grid.dim();
    const double esize = static_cast<double>(E.size());

    DistanceDecomposition out;
    out.counts = pair_histogram(E, distance_table(q));
    out.tol = term_tol(grid.cells());
    out.r_bound = static_cast<double>(mod.ell()) * (mod.ell() + 1.0) * esize *
                  std::pow(static_cast<double>(q),
                           (d - 1.0) * (2.0 * mod.ell() - 1.0) / (2.0 * mod.ell()));

    const double cells = static_cast<double>(grid.cells());
    out.main_term.resize(q);
    for (std::uint64_t j = 0; j < q; ++j)
        out.main_term[j] = esize * esize * static_cast<double>(ctx.sphere_sizes[j]) / cells;

    // Analytic route: q^{2d} sum_m |Ehat|^2 Shat_j(m), with the m != 0 part
    // collapsed onto frequency classes. In the unnormalized variables this
    // is sum_m |A(m)|^2 Shat_j(m) with A = q^d Ehat.
    const std::vector<double> power = raw_power_spectrum(E);
    std::vector<double> weight(ctx.classes.class_count(), 0.0);
    for (std::uint64_t m = 1; m < grid.cells(); ++m)
        weight[ctx.classes.class_of(m)] += power[m];

    out.fourier.resize(q);
    for (std::uint64_t j = 0; j < q; ++j) {
        cdouble r = 0;
        for (std::uint32_t cls = 0; cls < ctx.classes.class_count(); ++cls)
            r += weight[cls] * ctx.eval.eval(j, ctx.classes.key(cls));
        out.fourier[j] = out.main_term[j] + r;
    }
    return out;
}

std::vector<std::uint64_t> distance_set(const PointSet& E) {
    if (E.size() == 0) return {};
    return attained(pair_histogram(E, distance_table(E.grid().mod().q())));
}

std::vector<std::uint64_t> dot_product_set(const PointSet& E) {
    if (E.size() == 0) return {};
    return attained(pair_histogram(E, dot_table(E.grid().mod().q())));
}

DistanceDecomposition decompose_distances(const PointSet& E) {
    const IncidenceContext ctx(E.grid());
    return decompose_distances(E, ctx);
}

LambdaReport lambda(const PointSet& E, std::uint64_t j) {
    const Modulus& mod = E.grid().mod();
    const std::uint64_t jq = j % mod.q();
    const DistanceDecomposition dec = decompose_distances(E);
    LambdaReport rep;
    rep.count = dec.counts[jq];
    rep.main_term = dec.main_term[jq];
    rep.r_direct = static_cast<double>(rep.count) - rep.main_term;
    rep.r_fourier = dec.fourier[jq] - dec.main_term[jq];
    rep.r_bound = dec.r_bound;
    rep.radius_is_unit = mod.is_unit(jq);
    rep.tol = dec.tol;
    return rep;
}

DotDecomposition decompose_dot_products(const PointSet& E) {
    const Grid& grid = E.grid();
    const Modulus& mod = grid.mod();
    const std::uint64_t q = mod.q();
    const std::uint32_t d = grid.dim();
    const std::uint32_t ell = mod.ell();
    const std::size_t n = E.size();
    const double esize = static_cast<double>(n);

    DotDecomposition out;
    out.counts = pair_histogram(E, dot_table(q));
    out.main_term = esize * esize / static_cast<double>(q);
    out.tol = term_tol(q * static_cast<std::uint64_t>(n) * n);
    out.r_bound =
        ell * esize * std::pow(static_cast<double>(q), (d - 1.0) / 2.0 * (2.0 - 1.0 / ell));
    for (std::uint32_t i = 0; i < ell; ++i)
        out.level_bounds.push_back(esize *
                                   std::pow(static_cast<double>(q),
                                            (d - 1.0) / 2.0 * (1.0 + static_cast<double>(i) / ell)));

    // D(s) = sum over ordered pairs of e(s (x.y) / q), pair-major with a
    // fresh character evaluation per (s, pair); the frequencies s then
    // split by valuation into the nu_i.
    const UnitRoots w(q);
    const std::vector<std::uint32_t> table = dot_table(q);
    const std::vector<std::uint32_t> coords = E.coords_flat();
    std::vector<cdouble> dsum(q, cdouble(0, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t* xi = coords.data() + i * d;
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint32_t* yk = coords.data() + k * d;
            std::uint64_t acc = 0;
            for (std::uint32_t c = 0; c < d; ++c) acc += table[xi[c] * q + yk[c]];
            const std::uint64_t v = acc % q;
            for (std::uint64_t s = 0; s < q; ++s) dsum[s] += w[s * v % q];
        }
    }

    out.levels.assign(ell, std::vector<cdouble>(q, cdouble(0, 0)));
    for (std::uint64_t t = 0; t < q; ++t) {
        for (std::uint64_t s = 1; s < q; ++s) {
            const std::uint32_t i = mod.val(s).level;
            out.levels[i][t] += dsum[s] * w[(q - s * t % q) % q];
        }
        for (std::uint32_t i = 0; i < ell; ++i) out.levels[i][t] /= static_cast<double>(q);
    }
    return out;
}

NuReport nu(const PointSet& E, std::uint64_t t) {
    const Modulus& mod = E.grid().mod();
    const std::uint64_t tq = t % mod.q();
    const DotDecomposition dec = decompose_dot_products(E);
    NuReport rep;
    rep.count = dec.counts[tq];
    rep.main_term = dec.main_term;
    for (std::uint32_t i = 0; i < mod.ell(); ++i) {
        rep.nu_levels.push_back(dec.levels[i][tq]);
        rep.r += dec.levels[i][tq];
    }
    rep.r_bound = dec.r_bound;
    rep.level_bounds = dec.level_bounds;
    rep.t_is_unit = mod.is_unit(tq);
    rep.tol = dec.tol;
    return rep;
}

ResidueFibers residue_fibers(const PointSet& E, std::uint32_t level) {
    const Grid& grid = E.grid();
    const Modulus& mod = grid.mod();
    if (level > mod.ell()) throw InvalidRange("fiber level exceeds ell");
    const std::uint64_t P = checked_pow(mod.p(), mod.ell() - level);

    ResidueFibers out;
    out.level = level;
    out.kernel_size = checked_pow(mod.p(), level * grid.dim());

    std::vector<std::uint64_t> keys;
    keys.reserve(E.size());
    std::array<std::uint32_t, kMaxDim> x{};
    for (std::uint64_t idx : E.indices()) {
        grid.decode(idx, std::span<std::uint32_t>(x.data(), grid.dim()));
        std::uint64_t key = 0;
        for (std::uint32_t c = grid.dim(); c-- > 0;) key = key * P + x[c] % P;
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t k = i;
        while (k < keys.size() && keys[k] == keys[i]) ++k;
        out.counts.push_back(k - i);
        i = k;
    }
    return out;
}

namespace {

CoverageReport coverage(const PointSet& E, const std::vector<std::uint64_t>& values,
                        double constant) {
    const Modulus& mod = E.grid().mod();
    const std::uint32_t d = E.grid().dim();
    const double ell = static_cast<double>(mod.ell());
    const double q = static_cast<double>(mod.q());

    CoverageReport rep;
    rep.threshold = constant * std::pow(q, ((2.0 * ell - 1.0) * d + 1.0) / (2.0 * ell));
    rep.threshold_met = static_cast<double>(E.size()) >= rep.threshold;
    rep.guaranteed = mod.ell() == 1 &&
                     static_cast<double>(E.size()) >= 2.0 * std::pow(q, (d + 1.0) / 2.0) - 1e-9;

    std::vector<std::uint8_t> present(mod.q(), 0);
    for (std::uint64_t v : values) present[v] = 1;
    for (std::uint64_t u = 1; u < mod.q(); ++u)
        if (mod.is_unit(u) && !present[u]) rep.missing_units.push_back(u);
    rep.units_covered = rep.missing_units.empty();
    return rep;
}

} // namespace

CoverageReport check_distance_theorem(const PointSet& E) {
    const double ell = static_cast<double>(E.grid().mod().ell());
    return coverage(E, distance_set(E), ell * (ell + 1.0));
}

CoverageReport check_dotproduct_theorem(const PointSet& E) {
    const double ell = static_cast<double>(E.grid().mod().ell());
    return coverage(E, dot_product_set(E), ell);
}

DA2Report check_dA2(std::span<const std::uint64_t> A, const Modulus& mod, std::uint32_t d) {
    const std::uint64_t q = mod.q();
    std::vector<std::uint8_t> products(q, 0);
    for (std::uint64_t a : A)
        for (std::uint64_t b : A) products[RingElement::mul_mod(a % q, b % q, q)] = 1;

    // d-fold sumset by boolean convolution.
    std::vector<std::uint8_t> cur(products);
    for (std::uint32_t fold = 1; fold < d; ++fold) {
        std::vector<std::uint8_t> nxt(q, 0);
        for (std::uint64_t v = 0; v < q; ++v) {
            if (!cur[v]) continue;
            for (std::uint64_t wv = 0; wv < q; ++wv)
                if (products[wv]) nxt[(v + wv) % q] = 1;
        }
        cur.swap(nxt);
    }

    DA2Report rep;
    const double ell = static_cast<double>(mod.ell());
    rep.threshold = std::pow(static_cast<double>(q),
                             (2.0 * ell - 1.0) / (2.0 * ell) + 1.0 / (2.0 * ell * d));
    rep.threshold_met = static_cast<double>(A.size()) > rep.threshold;
    for (std::uint64_t u = 1; u < q; ++u)
        if (mod.is_unit(u) && !cur[u]) rep.missing_units.push_back(u);
    rep.covered = rep.missing_units.empty();
    return rep;
}

} // namespace zq
