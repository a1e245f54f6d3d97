#pragma once

//
// Exponential sums over Z_n: additive characters, quadratic Gauss sums
// G(a,b,n) = sum_x e(ax^2 + bx), Dirichlet characters of Legendre-power
// type with their generalized Gauss sums tau(psi, chi_a), Kloosterman and
// Salie sums over the unit group, and the analytic bounds they satisfy.
//
// Every sum has a direct-summation evaluator iterating representatives in
// ascending order (bit-stable results); closed forms, where they exist,
// are separate functions so the two can be checked against each other.
//

#include <cstdint>
#include <vector>

#include "zq/arith.hpp"
#include "zq/modulus.hpp"
#include "zq/tolerance.hpp"

namespace zq {

// Table of the n-th roots of unity; w(k) = exp(2 pi i k / n).
class UnitRoots {
public:
    explicit UnitRoots(std::uint64_t n);

    std::uint64_t n() const { return n_; }
    const cdouble& operator[](std::uint64_t k) const { return w_[k % n_]; }

private:
    std::uint64_t n_;
    std::vector<cdouble> w_;
};

// exp(2 pi i x / n); periodic in x.
cdouble additive_char(std::int64_t x, std::uint64_t n);

struct GaussSumParams {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::uint64_t n = 1;
};

// Literal summation over Z_n. The oracle for every closed form.
cdouble gauss_sum_direct(const GaussSumParams& params);

// Closed evaluation for odd n:
//   unit a:        G(a,0,n) = eps_n (a/n) sqrt(n),
//   completing the square:  G(a,b,n) = G(a,0,n) e(-b^2 / 4a),
//   general a:     G(a,b,n) = g G(a/g, b/g, n/g) if g=(a,n) divides b, else 0.
// Even n delegates to gauss_sum_direct.
cdouble gauss_sum_closed(const GaussSumParams& params);

// eps_n = 1 for n = 1 mod 4, i for n = 3 mod 4.
cdouble gauss_eps(std::uint64_t n);

// Multiplicative character mod p^beta of Legendre-power type:
// psi(x) = (x/p)^power on units, 0 on non-units.
struct DirichletChar {
    Modulus mod;
    std::uint32_t power;

    int operator()(std::uint64_t x) const {
        x %= mod.q();
        if (!mod.is_unit(x)) return 0;
        if (power % 2 == 0) return 1;
        return jacobi(static_cast<std::int64_t>(x), mod.p());
    }
};

struct AdditiveChar {
    std::int64_t a;
    std::uint64_t n;
};

// tau(psi, chi_a) = sum_x psi(x) e(ax/n). Throws ModulusMismatch when the
// two characters live over different moduli.
cdouble tau(const DirichletChar& psi, const AdditiveChar& chi);
cdouble tau(const DirichletChar& psi, std::int64_t a);

// K(a,b,q) = sum over units x of e((a x^{-1} + b x)/q).
cdouble kloosterman(std::int64_t a, std::int64_t b, const Modulus& mod);

// S(a,b,q) = sum over units x of e((a x^{-1} + b x)/q) (x/q).
cdouble salie(std::int64_t a, std::int64_t b, const Modulus& mod);

// Both sums from one pass over the unit group.
struct UnitGroupSums {
    cdouble kloosterman;
    cdouble salie;
};
UnitGroupSums kloosterman_salie(std::int64_t a, std::int64_t b, const Modulus& mod);

// Explicit Salie evaluation for gcd(2b, q) = 1:
//   S(a,b;q) = eps_q sqrt(q) (b/q) sum over v^2 = ab of e(2v/q),
// the v enumerated through hensel_sqrt.
cdouble salie_closed(std::int64_t a, std::int64_t b, const Modulus& mod);

// Weil: |K(a,b,q)| <= f(q) gcd(a,b,q)^{1/2} q^{1/2} with f the divisor count.
double kloosterman_weil_bound(std::int64_t a, std::int64_t b, const Modulus& mod);

// sum over units u of Z_{p^beta} of e((a u^{-1} + b u)/p^beta) (u/p)^{beta d};
// requires b a unit. Magnitude is bounded by (beta+1) p^{beta/2}.
cdouble twisted_unit_sum(std::int64_t a, std::int64_t b, std::uint32_t beta, std::uint32_t d,
                         std::uint64_t p);
double twisted_unit_sum_bound(std::uint32_t beta, std::uint64_t p);

// sum over units z of Z_{p^m} of e(p^n z / p^m) for 0 <= n < m. The value
// is exactly 0 (n < m-1) or -p^{m-1} (n = m-1), and in particular is a
// nonpositive real.
cdouble unit_char_sum(std::uint32_t n, std::uint32_t m, std::uint64_t p);
std::int64_t unit_char_sum_expected(std::uint32_t n, std::uint32_t m, std::uint64_t p);

} // namespace zq
