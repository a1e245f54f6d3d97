#pragma once

//
// Exact integer arithmetic helpers for Z_{p^ell} and small plain integers:
// modular inverses, Jacobi symbols, Hensel lifting of square roots,
// Moebius / divisor counting, and the two-factor CRT isomorphism.
//
// Everything here is deterministic and works on 64-bit values at desk
// scale; inputs that would overflow are rejected up front.
//

#include <cstdint>
#include <utility>
#include <vector>

#include "zq/modulus.hpp"

namespace zq {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// b^e mod m (m >= 1).
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// Overflow-checked p^e; throws CapacityExceeded past 2^63.
std::uint64_t checked_pow(std::uint64_t p, std::uint32_t e);

// Inverse of a modulo m; throws NotAUnit when gcd(a, m) > 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

// Jacobi symbol (a/m) for odd m >= 3; 0 iff gcd(a, m) > 1.
int jacobi(std::int64_t a, std::uint64_t m);

// Moebius function.
int mobius(std::uint64_t n);

// Number of positive divisors.
std::uint64_t divisor_count(std::uint64_t n);

// Valuation of x with respect to the prime p (x not reduced by any modulus);
// infinity for x = 0.
Valuation val_p(std::uint64_t x, std::uint64_t p);

// All solutions of x^2 = a in Z_q, q = p^ell odd. Unit residues are lifted
// from the mod-p roots; non-unit a falls back to exhaustive search.
// Result is sorted ascending.
std::vector<std::uint64_t> hensel_sqrt(std::uint64_t a, const Modulus& m);

// Ring isomorphism Z_{q1 q2} <-> Z_{q1} x Z_{q2} for coprime q1, q2.
std::pair<std::uint64_t, std::uint64_t> crt_split(std::uint64_t x, std::uint64_t q1,
                                                  std::uint64_t q2);
std::uint64_t crt_join(std::uint64_t r1, std::uint64_t r2, std::uint64_t q1, std::uint64_t q2);

} // namespace zq
