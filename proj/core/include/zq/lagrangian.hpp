#pragma once

//
// Totally isotropic (Lagrangian) subspaces of F_p^d for the standard dot
// form, and their full lifts to Z_{p^ell}^d. The lift of a Lagrangian
// subspace realizes the extremal sets whose distance and dot-product sets
// avoid every unit.
//
// Construction is deterministic: scan for an isotropic vector in
// lexicographic order, complete it to a hyperbolic pair, recurse on the
// pair's orthogonal complement. For d >= 3 odd this reaches dimension
// (d-1)/2; for even d the Witt index of the sum-of-squares form can fall
// short of d/2 for some (p, d), in which case the maximal subspace found
// is returned with reached_target = false.
//

#include <cstdint>
#include <vector>

#include "zq/incidence.hpp"
#include "zq/point_set.hpp"

namespace zq {

struct LagrangianSubspace {
    std::uint64_t p = 0;
    std::uint32_t dim_ambient = 0;
    std::vector<std::vector<std::uint32_t>> basis;  // linearly independent rows
    std::uint32_t target_dim = 0;                   // (d-1)/2 or d/2
    bool reached_target = false;

    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis.size()); }
    std::uint64_t size() const;  // p^dim
};

LagrangianSubspace find_lagrangian(std::uint64_t p, std::uint32_t d);

// Exhaustive check of v.w = 0 over the full span, all pairs.
bool verify_totally_isotropic(const LagrangianSubspace& L);

struct LiftedSet {
    LagrangianSubspace base;
    std::uint32_t ell = 0;
    PointSet points;
};

// Full preimage of span(L) under reduction mod p: all x in Z_{p^ell}^d
// whose reduction lies in the subspace. |E| = p^{(ell-1) d} |L|.
LiftedSet lift(const LagrangianSubspace& L, std::uint32_t ell);

struct SharpnessReport {
    bool pi_no_units = false;
    bool delta_no_units = false;
    bool sizes_ok = false;
    std::uint64_t expected_size = 0;
    std::uint64_t actual_size = 0;
    std::uint64_t pi_size = 0;
    std::uint64_t pi_size_cap = 0;  // p^{ell-1}
};

SharpnessReport verify_sharpness(const LiftedSet& E);

} // namespace zq
