#include "zq/sphere.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "zq/parallel.hpp"

namespace zq {

namespace {

constexpr std::uint64_t kSweepCellCap = std::uint64_t{1} << 28;

void check_sweep(const Grid& grid) {
    if (grid.cells() > kSweepCellCap) throw CapacityExceeded("sweep beyond the cell cap");
}

// Valuation of every residue, with val(0) capped at ell.
std::vector<std::uint8_t> valuation_table(const Modulus& mod) {
    std::vector<std::uint8_t> table(mod.q());
    table[0] = static_cast<std::uint8_t>(mod.ell());
    for (std::uint64_t x = 1; x < mod.q(); ++x) {
        std::uint32_t v = 0;
        std::uint64_t y = x;
        while (y % mod.p() == 0) {
            y /= mod.p();
            ++v;
        }
        table[x] = static_cast<std::uint8_t>(v);
    }
    return table;
}

} // namespace

SphereSpec::SphereSpec(const Modulus& m, std::uint32_t d, std::uint64_t j)
    : mod(m), dim(d), radius(j % m.q()) {
    if (d < 2) throw InvalidRange("spheres need dimension >= 2");
}

std::vector<std::uint64_t> sphere_counts(const Grid& grid) {
    check_sweep(grid);
    const std::uint64_t q = grid.mod().q();
    const std::uint32_t d = grid.dim();
    std::vector<std::uint64_t> sq(q);
    for (std::uint64_t x = 0; x < q; ++x) sq[x] = x * x % q;

    std::vector<std::uint64_t> hist(q, 0);
    std::mutex merge;
    parallel_for(grid.cells(), [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> local(q, 0);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::uint64_t rest = idx, norm = 0;
            for (std::uint32_t i = 0; i < d; ++i) {
                norm += sq[rest % q];
                rest /= q;
            }
            ++local[norm % q];
        }
        std::lock_guard<std::mutex> lock(merge);
        for (std::uint64_t v = 0; v < q; ++v) hist[v] += local[v];
    });
    return hist;
}

PointSet enumerate_sphere(const SphereSpec& spec) {
    const Grid grid(spec.mod, spec.dim);
    check_sweep(grid);
    const std::uint64_t q = spec.mod.q();
    std::vector<std::uint64_t> sq(q);
    for (std::uint64_t x = 0; x < q; ++x) sq[x] = x * x % q;

    std::map<std::uint64_t, std::vector<std::uint64_t>> parts;
    std::mutex merge;
    parallel_for(grid.cells(), [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> local;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::uint64_t rest = idx, norm = 0;
            for (std::uint32_t i = 0; i < spec.dim; ++i) {
                norm += sq[rest % q];
                rest /= q;
            }
            if (norm % q == spec.radius) local.push_back(idx);
        }
        std::lock_guard<std::mutex> lock(merge);
        parts.emplace(begin, std::move(local));
    });

    std::vector<std::uint64_t> points;
    for (auto& [begin, part] : parts)
        points.insert(points.end(), part.begin(), part.end());
    return PointSet(grid, std::move(points));
}

double sphere_error_term_bound(const Modulus& mod, std::uint32_t dim) {
    const double p = static_cast<double>(mod.p());
    const double ell = static_cast<double>(mod.ell());
    const double ld = ell * dim;
    if (dim % 2 == 0) return ell * std::pow(p, ld - dim / 2.0);
    return 2.0 * ell * std::pow(p, ld - (dim - 1) / 2.0);
}

double sphere_error_sum_bound(const Modulus& mod, std::uint32_t dim) {
    return sphere_error_term_bound(mod, dim);
}

SphereCountReport count_via_gauss(const SphereSpec& spec) {
    const Modulus& mod = spec.mod;
    const std::uint64_t q = mod.q();
    const std::uint64_t p = mod.p();
    const std::uint32_t d = spec.dim;

    SphereCountReport report;
    report.main_term = checked_pow(q, d - 1);
    report.per_term_bound = sphere_error_term_bound(mod, d);
    report.sum_bound = sphere_error_sum_bound(mod, d);

    if (!mod.is_unit(spec.radius)) {
        // Outside the unit-radius theory; count by enumeration.
        const Grid grid(mod, d);
        report.exact_count = sphere_counts(grid)[spec.radius];
        report.via_gauss = false;
        return report;
    }

    // T_inf = q^d, and for valuation level i the frequencies s = p^i s'
    // contribute p^{id} sum over units s' of G(s', p^{ell-i})^d e(-s'j).
    cdouble total = static_cast<double>(checked_pow(q, d));
    cdouble error_sum = 0;
    for (std::uint32_t i = 0; i < mod.ell(); ++i) {
        const std::uint64_t P = checked_pow(p, mod.ell() - i);
        const bool twisted = ((mod.ell() - i) * static_cast<std::uint64_t>(d)) % 2 == 1;
        const UnitRoots roots(P);
        const cdouble pref = std::pow(static_cast<double>(p), static_cast<double>(i) * d) *
                             std::pow(std::sqrt(static_cast<double>(P)), static_cast<double>(d)) *
                             std::pow(gauss_eps(P), static_cast<double>(d));
        const std::uint64_t jr = spec.radius % P;
        cdouble ssum = 0;
        for (std::uint64_t s = 1; s < P; ++s) {
            if (s % p == 0) continue;
            const cdouble term = roots[(P - jr * s % P) % P];
            if (twisted)
                ssum += static_cast<double>(jacobi(static_cast<std::int64_t>(s % p), p)) * term;
            else
                ssum += term;
        }
        const cdouble ti = pref * ssum;
        report.error_term_mags.push_back(std::abs(ti));
        error_sum += ti;
        total += ti;
    }
    report.error_sum_mag = std::abs(error_sum);

    const cdouble raw = total / static_cast<double>(q);
    const double rounded = std::round(raw.real());
    report.drift = std::abs(raw - cdouble(rounded, 0));
    if (rounded < 0) throw Error("sphere count rounded negative");
    report.exact_count = static_cast<std::uint64_t>(rounded);
    report.via_gauss = true;
    return report;
}

double sphere_decay_bound(const Modulus& mod, std::uint32_t dim) {
    const double ell = static_cast<double>(mod.ell());
    const double expo = -(static_cast<double>(dim) + 2.0 * ell - 1.0) / (2.0 * ell);
    return ell * (ell + 1.0) * std::pow(static_cast<double>(mod.q()), expo);
}

FrequencyClassIndex FrequencyClassIndex::build(const Grid& grid) {
    check_sweep(grid);
    if (!grid.dense_ok()) throw CapacityExceeded("frequency classes need a dense grid");
    const Modulus& mod = grid.mod();
    const std::uint64_t q = mod.q();
    const std::uint32_t d = grid.dim();
    const std::uint32_t ell = mod.ell();
    const std::uint64_t sigmod = checked_pow(mod.p(), 2 * ell - 1);

    const std::vector<std::uint8_t> val = valuation_table(mod);
    std::vector<std::uint64_t> sq(q);
    for (std::uint64_t x = 0; x < q; ++x) sq[x] = x * x;

    const auto slot_of = [&](std::uint64_t idx) -> std::uint64_t {
        std::uint64_t rest = idx, norm = 0;
        std::uint32_t kappa = ell;
        for (std::uint32_t i = 0; i < d; ++i) {
            const std::uint64_t c = rest % q;
            rest /= q;
            norm += sq[c];
            kappa = std::min<std::uint32_t>(kappa, val[c]);
        }
        return static_cast<std::uint64_t>(kappa) * sigmod + norm % sigmod;
    };

    // Pass 1: which (kappa, residue) slots occur. Pass 2: per-cell ids.
    std::vector<std::uint8_t> attained(static_cast<std::size_t>(ell) * sigmod, 0);
    std::mutex merge;
    parallel_for(grid.cells(), [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint8_t> local(attained.size(), 0);
        for (std::uint64_t idx = std::max<std::uint64_t>(begin, 1); idx < end; ++idx)
            local[slot_of(idx)] = 1;
        std::lock_guard<std::mutex> lock(merge);
        for (std::size_t s = 0; s < local.size(); ++s)
            if (local[s]) attained[s] = 1;
    });

    FrequencyClassIndex out(grid);
    std::vector<std::uint32_t> id_of_slot(attained.size(), kZeroCell);
    for (std::size_t s = 0; s < attained.size(); ++s) {
        if (!attained[s]) continue;
        id_of_slot[s] = static_cast<std::uint32_t>(out.keys_.size());
        out.keys_.push_back(Key{static_cast<std::uint32_t>(s / sigmod), s % sigmod});
    }

    out.class_of_cell_.resize(grid.cells());
    out.class_of_cell_[0] = kZeroCell;
    parallel_for(grid.cells(), [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t idx = std::max<std::uint64_t>(begin, 1); idx < end; ++idx)
            out.class_of_cell_[idx] = id_of_slot[slot_of(idx)];
    });

    out.sizes_.assign(out.keys_.size(), 0);
    for (std::uint64_t idx = 1; idx < grid.cells(); ++idx) ++out.sizes_[out.class_of_cell_[idx]];
    return out;
}

SphereHatEvaluator::SphereHatEvaluator(const Modulus& mod, std::uint32_t dim)
    : mod_(mod), dim_(dim), cells_(std::pow(static_cast<double>(mod.q()), dim)) {
    const std::uint64_t p = mod.p();
    for (std::uint32_t nu = 0; nu < mod.ell(); ++nu) {
        const std::uint64_t P = checked_pow(p, mod.ell() - nu);
        Level lev{P,
                  checked_pow(p, 2 * nu),
                  std::pow(static_cast<double>(p), static_cast<double>(nu) * dim) *
                      std::pow(std::sqrt(static_cast<double>(P)), static_cast<double>(dim)) *
                      std::pow(gauss_eps(P), static_cast<double>(dim)),
                  ((mod.ell() - nu) * static_cast<std::uint64_t>(dim)) % 2 == 1,
                  {},
                  {},
                  {},
                  UnitRoots(P)};
        for (std::uint64_t u = 1; u < P; ++u) {
            if (u % p == 0) continue;
            lev.units.push_back(u);
            lev.inv4u.push_back(inverse_mod(4 * u % P, P));
            lev.sign.push_back(lev.twisted ? jacobi(static_cast<std::int64_t>(u % p), p) : 1);
        }
        levels_.push_back(std::move(lev));
    }
}

cdouble SphereHatEvaluator::eval(std::uint64_t j, const FrequencyClassIndex::Key& key) const {
    cdouble acc = 0;
    const std::uint32_t top = std::min<std::uint32_t>(key.kappa, mod_.ell() - 1);
    for (std::uint32_t nu = 0; nu <= top; ++nu) {
        const Level& lev = levels_[nu];
        const std::uint64_t P = lev.P;
        const std::uint64_t W = (key.norm_residue / lev.p2nu) % P;
        const std::uint64_t jr = j % P;
        cdouble inner = 0;
        for (std::size_t k = 0; k < lev.units.size(); ++k) {
            const std::uint64_t e = (W * lev.inv4u[k] + jr * lev.units[k]) % P;
            const cdouble term = lev.roots[(P - e) % P];
            inner += static_cast<double>(lev.sign[k]) * term;
        }
        acc += lev.prefactor * inner;
    }
    return acc / (cells_ * static_cast<double>(mod_.q()));
}

DecayReport sphere_fourier_decay(const SphereSpec& spec) {
    if (!spec.mod.is_unit(spec.radius)) throw NotAUnit("decay bound applies to unit radii");
    const PointSet sphere = enumerate_sphere(spec);
    const GridFunction hat = fourier_forward(GridFunction::indicator(sphere));

    const std::uint64_t cells = hat.size();
    // Scanning for a max is order-free; any partition gives the same sup.
    std::mutex merge;
    double sup = 0;
    parallel_for(cells, [&](std::uint64_t begin, std::uint64_t end) {
        double local = 0;
        for (std::uint64_t m = std::max<std::uint64_t>(begin, 1); m < end; ++m)
            local = std::max(local, std::abs(hat[m]));
        std::lock_guard<std::mutex> lock(merge);
        sup = std::max(sup, local);
    });
    return DecayReport{sup, sphere_decay_bound(spec.mod, spec.dim)};
}

DecayReport sphere_fourier_decay_closed(const SphereSpec& spec) {
    const Grid grid(spec.mod, spec.dim);
    const FrequencyClassIndex classes = FrequencyClassIndex::build(grid);
    const SphereHatEvaluator eval(spec.mod, spec.dim);
    return sphere_fourier_decay_closed(spec, classes, eval);
}

DecayReport sphere_fourier_decay_closed(const SphereSpec& spec, const FrequencyClassIndex& classes,
                                        const SphereHatEvaluator& eval) {
    if (!spec.mod.is_unit(spec.radius)) throw NotAUnit("decay bound applies to unit radii");
    double sup = 0;
    for (std::uint32_t cls = 0; cls < classes.class_count(); ++cls)
        sup = std::max(sup, std::abs(eval.eval(spec.radius, classes.key(cls))));
    return DecayReport{sup, sphere_decay_bound(spec.mod, spec.dim)};
}

cdouble sphere_hat_direct(const PointSet& sphere, std::span<const std::uint32_t> m) {
    const Grid& grid = sphere.grid();
    if (m.size() != grid.dim()) throw ShapeMismatch("frequency dimension mismatch");
    const std::uint64_t q = grid.mod().q();
    const UnitRoots w(q);
    cdouble acc = 0;
    std::array<std::uint32_t, kMaxDim> x{};
    for (std::uint64_t idx : sphere.indices()) {
        grid.decode(idx, std::span<std::uint32_t>(x.data(), grid.dim()));
        std::uint64_t dot = 0;
        for (std::uint32_t i = 0; i < grid.dim(); ++i)
            dot += static_cast<std::uint64_t>(x[i]) * m[i] % q;
        acc += w[(q - dot % q) % q];
    }
    return acc / static_cast<double>(grid.cells());
}

std::vector<AsymptoticRow> sphere_size_asymptotic_check(const Grid& grid) {
    const Modulus& mod = grid.mod();
    const std::vector<std::uint64_t> counts = sphere_counts(grid);
    const double main = std::pow(static_cast<double>(mod.q()), grid.dim() - 1.0);
    const double allowance = sphere_error_sum_bound(mod, grid.dim()) / static_cast<double>(mod.q());

    std::vector<AsymptoticRow> rows;
    for (std::uint64_t j = 0; j < mod.q(); ++j) {
        if (!mod.is_unit(j)) continue;
        AsymptoticRow row;
        row.radius = j;
        row.exact = counts[j];
        row.ratio = static_cast<double>(counts[j]) / main;
        row.allowance = allowance;
        row.within = std::abs(static_cast<double>(counts[j]) - main) <= allowance + 1e-9;
        rows.push_back(row);
    }
    return rows;
}

std::pair<std::uint64_t, std::uint64_t> crt_sphere_count(const Modulus& m1, const Modulus& m2,
                                                         std::uint32_t dim, std::uint64_t t1,
                                                         std::uint64_t t2) {
    if (m1.p() == m2.p()) throw NotCoprime("crt sphere check needs distinct primes");
    const std::uint64_t count1 = sphere_counts(Grid(m1, dim))[t1 % m1.q()];
    const std::uint64_t count2 = sphere_counts(Grid(m2, dim))[t2 % m2.q()];

    const std::uint64_t bigq = m1.q() * m2.q();
    const std::uint64_t t = crt_join(t1, t2, m1.q(), m2.q());
    std::uint64_t cells = 1;
    for (std::uint32_t i = 0; i < dim; ++i) {
        if (cells > kSweepCellCap / bigq) throw CapacityExceeded("crt sweep too large");
        cells *= bigq;
    }
    std::vector<std::uint64_t> sq(bigq);
    for (std::uint64_t x = 0; x < bigq; ++x) sq[x] = x * x % bigq;
    std::uint64_t direct = 0;
    std::mutex merge;
    parallel_for(cells, [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t local = 0;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::uint64_t rest = idx, norm = 0;
            for (std::uint32_t i = 0; i < dim; ++i) {
                norm += sq[rest % bigq];
                rest /= bigq;
            }
            if (norm % bigq == t) ++local;
        }
        std::lock_guard<std::mutex> lock(merge);
        direct += local;
    });
    return {count1 * count2, direct};
}

} // namespace zq
