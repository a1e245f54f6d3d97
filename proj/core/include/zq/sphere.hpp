#pragma once

//
// Spheres S_j = {x in Z_q^d : x_1^2 + ... + x_d^2 = j}.
//
// Three independent routes into the same objects:
//   * exhaustive enumeration (the oracle),
//   * counting through the quadratic-Gauss-sum decomposition
//       |S_j| = q^{-1} (T_inf + T_0 + ... + T_{ell-1}),
//     where T_i collects the frequencies s of p-adic valuation i,
//   * the Fourier coefficients Shat_j(m), either by a dense transform of
//     the indicator or in closed form through G(t, -m_i, q).
//
// The closed form shows Shat_j(m) depends on m only through
// kappa(m) = min_i val_p(m_i) and ||m|| mod p^{2 ell - 1}; the
// FrequencyClassIndex groups the q^d frequencies by that pair so a full
// decay scan touches each class once instead of each cell per radius.
//

#include <cstdint>
#include <utility>
#include <vector>

#include "zq/char_sums.hpp"
#include "zq/fourier.hpp"
#include "zq/grid.hpp"
#include "zq/point_set.hpp"

namespace zq {

struct SphereSpec {
    Modulus mod;
    std::uint32_t dim;
    std::uint64_t radius;

    SphereSpec(const Modulus& m, std::uint32_t d, std::uint64_t j);
};

// Histogram of ||x|| over the whole grid: all sphere sizes in one sweep.
std::vector<std::uint64_t> sphere_counts(const Grid& grid);

PointSet enumerate_sphere(const SphereSpec& spec);

struct SphereCountReport {
    std::uint64_t exact_count = 0;
    std::uint64_t main_term = 0;          // q^{d-1}
    std::vector<double> error_term_mags;  // |T_i|, i = 0 .. ell-1
    double error_sum_mag = 0;             // |T_0 + ... + T_{ell-1}|
    double per_term_bound = 0;
    double sum_bound = 0;
    double drift = 0;                     // |raw - rounded| of the complex total
    bool via_gauss = false;               // false: non-unit radius, enumerated
};

// Exact count by the T_i decomposition for unit radii; non-unit radii are
// enumerated instead (the asymptotics do not apply to them).
SphereCountReport count_via_gauss(const SphereSpec& spec);

// Bounds on the error terms, keyed on the parity of d; see count_via_gauss.
double sphere_error_sum_bound(const Modulus& mod, std::uint32_t dim);
double sphere_error_term_bound(const Modulus& mod, std::uint32_t dim);

// sup_{m != 0} |Shat_j(m)| <= ell (ell+1) q^{-(d + 2 ell - 1)/(2 ell)}.
double sphere_decay_bound(const Modulus& mod, std::uint32_t dim);

struct DecayReport {
    double sup_offzero = 0;
    double bound = 0;
};

// Nonzero frequencies grouped by (kappa, ||m|| mod p^{2 ell - 1}); the
// classes are exactly the level sets of every Shat_j.
class FrequencyClassIndex {
public:
    struct Key {
        std::uint32_t kappa;
        std::uint64_t norm_residue;
    };

    static FrequencyClassIndex build(const Grid& grid);

    const Grid& grid() const { return grid_; }
    std::uint32_t class_count() const { return static_cast<std::uint32_t>(keys_.size()); }
    const Key& key(std::uint32_t cls) const { return keys_[cls]; }

    // Compact class of a nonzero cell; cell 0 maps to kZeroCell.
    static constexpr std::uint32_t kZeroCell = 0xFFFFFFFFu;
    std::uint32_t class_of(std::uint64_t cell) const { return class_of_cell_[cell]; }

    // Number of cells in each class (norm check: they sum to q^d - 1).
    const std::vector<std::uint64_t>& class_sizes() const { return sizes_; }

private:
    FrequencyClassIndex(const Grid& grid) : grid_(grid) {}

    Grid grid_;
    std::vector<Key> keys_;
    std::vector<std::uint64_t> sizes_;
    std::vector<std::uint32_t> class_of_cell_;
};

// Closed-form evaluator of Shat_j on a frequency class, from
//   Shat_j(m) = q^{-d-1} sum_t e(-jt/q) prod_i G(t, -m_i, q).
class SphereHatEvaluator {
public:
    SphereHatEvaluator(const Modulus& mod, std::uint32_t dim);

    cdouble eval(std::uint64_t j, const FrequencyClassIndex::Key& key) const;

private:
    struct Level {
        std::uint64_t P;                 // p^{ell - nu}
        std::uint64_t p2nu;              // p^{2 nu}
        cdouble prefactor;               // p^{nu d} P^{d/2} eps_P^d
        bool twisted;                    // (ell - nu) d odd
        std::vector<std::uint64_t> units;
        std::vector<std::uint64_t> inv4u;
        std::vector<int> sign;
        UnitRoots roots;
    };

    Modulus mod_;
    std::uint32_t dim_;
    double cells_;
    std::vector<Level> levels_;
};

// Decay through the dense transform of the enumerated indicator.
DecayReport sphere_fourier_decay(const SphereSpec& spec);

// Same quantity through the closed form; exact to rounding, and fast
// enough for the full grid of radii.
DecayReport sphere_fourier_decay_closed(const SphereSpec& spec);
DecayReport sphere_fourier_decay_closed(const SphereSpec& spec, const FrequencyClassIndex& classes,
                                        const SphereHatEvaluator& eval);

// Single Fourier coefficient by direct summation over the sphere's points
// (spot-check oracle for grids too large to transform).
cdouble sphere_hat_direct(const PointSet& sphere, std::span<const std::uint32_t> m);

struct AsymptoticRow {
    std::uint64_t radius = 0;
    std::uint64_t exact = 0;
    double ratio = 0;        // exact / q^{d-1}
    double allowance = 0;    // q^{-1} * error-sum bound
    bool within = false;
};

// |exact - q^{d-1}| against the T-sum allowance, for every unit radius.
std::vector<AsymptoticRow> sphere_size_asymptotic_check(const Grid& grid);

// Sphere count over Z_{q1 q2} versus the product of the component counts.
// Returns {product_count, direct_count}.
std::pair<std::uint64_t, std::uint64_t> crt_sphere_count(const Modulus& m1, const Modulus& m2,
                                                         std::uint32_t dim, std::uint64_t t1,
                                                         std::uint64_t t2);

} // namespace zq
