#pragma once

#include <complex>
#include <cstdint>

namespace zq {

using cdouble = std::complex<double>;

// Comparison tolerance for a sum accumulated from `terms` unit-modulus
// summands: tau = 1e-9 * terms. Every bound and identity check in the
// library measures against this budget.
inline double term_tol(std::uint64_t terms) { return 1e-9 * static_cast<double>(terms); }

inline bool approx_eq(const cdouble& a, const cdouble& b, double tol) {
    return std::abs(a - b) <= tol;
}

} // namespace zq
