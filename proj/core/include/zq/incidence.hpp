#pragma once

//
// Incidence theory for a point set E in Z_q^d.
//
// lambda_j counts ordered pairs at distance j; nu(t) counts ordered pairs
// with dot product t. Each has two independent routes:
//
//   * direct: enumerate E x E and histogram the invariant;
//   * analytic: lambda_j = q^{2d} sum_m |Ehat(m)|^2 Shat_j(m), and
//     nu(t) = |E|^2/q + sum_{i < ell} nu_i(t) with nu_i the frequencies of
//     p-adic valuation i in the character expansion.
//
// The decompositions below compute both routes for every j (resp. t) at
// once; the agreement of the two is the content of the identity checks,
// and the error terms carry the unit-argument bounds.
//

#include <cstdint>
#include <span>
#include <vector>

#include "zq/point_set.hpp"
#include "zq/sphere.hpp"
#include "zq/tolerance.hpp"

namespace zq {

// Ordered-pair enumeration cap.
inline constexpr std::uint64_t kPairCap = 1'000'000'000;

std::vector<std::uint64_t> distance_set(const PointSet& E);
std::vector<std::uint64_t> dot_product_set(const PointSet& E);

// Per-grid machinery shared across point sets: sphere sizes, frequency
// classes and the closed-form evaluator. Build once per (q, d) when
// decomposing many sets on the same grid.
struct IncidenceContext {
    explicit IncidenceContext(const Grid& grid)
        : sphere_sizes(sphere_counts(grid)),
          classes(FrequencyClassIndex::build(grid)),
          eval(grid.mod(), grid.dim()) {}

    std::vector<std::uint64_t> sphere_sizes;
    FrequencyClassIndex classes;
    SphereHatEvaluator eval;
};

struct DistanceDecomposition {
    std::vector<std::uint64_t> counts;  // lambda_j for every j
    std::vector<double> main_term;      // |E|^2 |S_j| / q^d
    std::vector<cdouble> fourier;       // main_term + R_j via the m-sum
    double r_bound = 0;                 // |R_j| bound for unit j
    double tol = 0;
    bool counts_direct = true;          // false: counts rounded from fourier
};
DistanceDecomposition decompose_distances(const PointSet& E);
DistanceDecomposition decompose_distances(const PointSet& E, const IncidenceContext& ctx);

struct LambdaReport {
    std::uint64_t count = 0;
    double main_term = 0;
    double r_direct = 0;     // count - main_term
    cdouble r_fourier = 0;   // q^{2d} sum_{m != 0} |Ehat|^2 Shat_j
    double r_bound = 0;
    bool radius_is_unit = false;
    double tol = 0;
};
LambdaReport lambda(const PointSet& E, std::uint64_t j);

struct DotDecomposition {
    std::vector<std::uint64_t> counts;         // nu(t) for every t
    double main_term = 0;                      // |E|^2 / q
    std::vector<std::vector<cdouble>> levels;  // nu_i(t), indexed [i][t]
    std::vector<double> level_bounds;          // |nu_i(t)| bound for unit t
    double r_bound = 0;                        // |R(t)| bound for unit t
    double tol = 0;
    bool counts_direct = true;
};
DotDecomposition decompose_dot_products(const PointSet& E);

struct NuReport {
    std::uint64_t count = 0;
    double main_term = 0;
    std::vector<cdouble> nu_levels;
    cdouble r = 0;
    double r_bound = 0;
    std::vector<double> level_bounds;
    bool t_is_unit = false;
    double tol = 0;
};
NuReport nu(const PointSet& E, std::uint64_t t);

// Fibers of E under reduction mod p^{ell-i}: the nonzero fiber sizes.
struct ResidueFibers {
    std::uint32_t level = 0;
    std::uint64_t kernel_size = 0;  // p^{i d}
    std::vector<std::uint64_t> counts;
};
ResidueFibers residue_fibers(const PointSet& E, std::uint32_t level);

struct CoverageReport {
    double threshold = 0;
    bool threshold_met = false;
    bool guaranteed = false;  // ell = 1 and |E| >= 2 q^{(d+1)/2}
    bool units_covered = false;
    std::vector<std::uint64_t> missing_units;
};

// Distance coverage: threshold ell (ell+1) q^{((2 ell - 1) d + 1)/(2 ell)}
// (advisory, implied constant 1); coverage itself is computed exactly.
CoverageReport check_distance_theorem(const PointSet& E);

// Dot-product coverage: threshold ell q^{((2 ell - 1) d + 1)/(2 ell)}.
CoverageReport check_dotproduct_theorem(const PointSet& E);

struct DA2Report {
    bool covered = false;
    std::vector<std::uint64_t> missing_units;
    double threshold = 0;
    bool threshold_met = false;
};

// d-fold sumset of A.A against the unit group.
DA2Report check_dA2(std::span<const std::uint64_t> A, const Modulus& mod, std::uint32_t d);

} // namespace zq
