#include "zq/char_sums.hpp"

#include <cmath>
#include <numbers>

namespace zq {

namespace {

constexpr std::uint64_t kDirectSumCap = std::uint64_t{1} << 31;

double angle(std::uint64_t k, std::uint64_t n) {
    return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
}

cdouble root(std::uint64_t k, std::uint64_t n) {
    const double t = angle(k % n, n);
    return cdouble(std::cos(t), std::sin(t));
}

std::uint64_t reduce(std::int64_t x, std::uint64_t n) {
    std::int64_t r = x % static_cast<std::int64_t>(n);
    if (r < 0) r += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(r);
}

} // namespace

UnitRoots::UnitRoots(std::uint64_t n) : n_(n) {
    if (n == 0) throw InvalidRange("UnitRoots modulus must be >= 1");
    if (n > kDirectSumCap) throw CapacityExceeded("root table too large");
    w_.resize(n);
    for (std::uint64_t k = 0; k < n; ++k) w_[k] = root(k, n);
}

cdouble additive_char(std::int64_t x, std::uint64_t n) {
    if (n == 0) throw InvalidRange("additive character modulus must be >= 1");
    return root(reduce(x, n), n);
}

cdouble gauss_sum_direct(const GaussSumParams& params) {
    const std::uint64_t n = params.n;
    if (n == 0) throw InvalidRange("Gauss sum modulus must be >= 1");
    if (n > kDirectSumCap) throw CapacityExceeded("direct Gauss sum too large");
    const std::uint64_t a = reduce(params.a, n);
    const std::uint64_t b = reduce(params.b, n);
    const UnitRoots w(n);
    cdouble acc = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
        const std::uint64_t x2 = x * x % n;
        acc += w[(a * x2 + b * x) % n];
    }
    return acc;
}

cdouble gauss_eps(std::uint64_t n) {
    switch (n % 4) {
        case 1: return cdouble(1, 0);
        case 3: return cdouble(0, 1);
        default: throw InvalidRange("eps_n defined for odd n only");
    }
}

cdouble gauss_sum_closed(const GaussSumParams& params) {
    const std::uint64_t n = params.n;
    if (n == 0) throw InvalidRange("Gauss sum modulus must be >= 1");
    if (n % 2 == 0) return gauss_sum_direct(params);
    if (n == 1) return cdouble(1, 0);

    const std::uint64_t a = reduce(params.a, n);
    const std::uint64_t b = reduce(params.b, n);

    // Reduce a non-unit quadratic coefficient: with g = (a, n), the sum
    // vanishes unless g | b, and otherwise collapses g-fold.
    const std::uint64_t g = (a == 0) ? n : gcd_u64(a, n);
    if (b % g != 0) return cdouble(0, 0);
    const std::uint64_t n1 = n / g;
    if (n1 == 1) return cdouble(static_cast<double>(g), 0);
    const std::uint64_t a1 = (a / g) % n1;
    const std::uint64_t b1 = (b / g) % n1;

    // Unit coefficient now: complete the square, then evaluate G(a,0,n).
    const cdouble base = gauss_eps(n1) *
                         static_cast<double>(jacobi(static_cast<std::int64_t>(a1), n1)) *
                         std::sqrt(static_cast<double>(n1));
    const std::uint64_t inv4a = inverse_mod(4 * a1 % n1, n1);
    const std::uint64_t shift = n1 - RingElement::mul_mod(b1 * b1 % n1, inv4a, n1);
    return static_cast<double>(g) * base * additive_char(static_cast<std::int64_t>(shift % n1), n1);
}

cdouble tau(const DirichletChar& psi, const AdditiveChar& chi) {
    if (psi.mod.q() != chi.n) throw ModulusMismatch("tau characters over different moduli");
    return tau(psi, chi.a);
}

cdouble tau(const DirichletChar& psi, std::int64_t a) {
    const std::uint64_t n = psi.mod.q();
    const std::uint64_t ar = reduce(a, n);
    const UnitRoots w(n);
    cdouble acc = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
        const int psix = psi(x);
        if (psix == 0) continue;
        acc += static_cast<double>(psix) * w[ar * x % n];
    }
    return acc;
}

UnitGroupSums kloosterman_salie(std::int64_t a, std::int64_t b, const Modulus& mod) {
    const std::uint64_t q = mod.q();
    const std::uint64_t p = mod.p();
    const std::uint64_t ar = mod.reduce(a);
    const std::uint64_t br = mod.reduce(b);
    const UnitRoots w(q);
    cdouble k = 0, s = 0;
    for (std::uint64_t x = 1; x < q; ++x) {
        if (x % p == 0) continue;
        const std::uint64_t inv = inverse_mod(x, q);
        const cdouble term = w[(ar * inv + br * x) % q];
        k += term;
        // (x/q) = (x/p)^ell; the parity of ell decides whether it twists.
        int sign = (mod.ell() % 2 == 0) ? 1 : jacobi(static_cast<std::int64_t>(x % p), p);
        s += static_cast<double>(sign) * term;
    }
    return {k, s};
}

cdouble kloosterman(std::int64_t a, std::int64_t b, const Modulus& mod) {
    return kloosterman_salie(a, b, mod).kloosterman;
}

cdouble salie(std::int64_t a, std::int64_t b, const Modulus& mod) {
    return kloosterman_salie(a, b, mod).salie;
}

cdouble salie_closed(std::int64_t a, std::int64_t b, const Modulus& mod) {
    const std::uint64_t q = mod.q();
    const std::uint64_t br = mod.reduce(b);
    if (!mod.is_unit(br)) throw NotAUnit("salie_closed requires gcd(2b, q) = 1");
    const std::uint64_t ar = mod.reduce(a);
    const std::uint64_t ab = RingElement::mul_mod(ar, br, q);
    cdouble vsum = 0;
    for (std::uint64_t v : hensel_sqrt(ab, mod))
        vsum += additive_char(static_cast<std::int64_t>(2 * v % q), q);
    const double legendre_b = static_cast<double>(jacobi(static_cast<std::int64_t>(br), q));
    return gauss_eps(q) * std::sqrt(static_cast<double>(q)) * legendre_b * vsum;
}

double kloosterman_weil_bound(std::int64_t a, std::int64_t b, const Modulus& mod) {
    const std::uint64_t q = mod.q();
    const std::uint64_t g = gcd_u64(gcd_u64(mod.reduce(a), mod.reduce(b)), q);
    const std::uint64_t g_or_q = (g == 0) ? q : g;
    return static_cast<double>(divisor_count(q)) * std::sqrt(static_cast<double>(g_or_q)) *
           std::sqrt(static_cast<double>(q));
}

cdouble twisted_unit_sum(std::int64_t a, std::int64_t b, std::uint32_t beta, std::uint32_t d,
                         std::uint64_t p) {
    const Modulus mod = Modulus::odd_prime_power(p, beta);
    const std::uint64_t q = mod.q();
    const std::uint64_t br = mod.reduce(b);
    if (!mod.is_unit(br)) throw NotAUnit("twisted_unit_sum requires a unit linear coefficient");
    const std::uint64_t ar = mod.reduce(a);
    const bool twisted = (static_cast<std::uint64_t>(beta) * d) % 2 == 1;
    const UnitRoots w(q);
    cdouble acc = 0;
    for (std::uint64_t u = 1; u < q; ++u) {
        if (u % p == 0) continue;
        const std::uint64_t inv = inverse_mod(u, q);
        const cdouble term = w[(ar * inv + br * u) % q];
        if (twisted)
            acc += static_cast<double>(jacobi(static_cast<std::int64_t>(u % p), p)) * term;
        else
            acc += term;
    }
    return acc;
}

double twisted_unit_sum_bound(std::uint32_t beta, std::uint64_t p) {
    return (beta + 1) * std::pow(static_cast<double>(p), beta / 2.0);
}

cdouble unit_char_sum(std::uint32_t n, std::uint32_t m, std::uint64_t p) {
    if (n >= m) throw InvalidRange("unit_char_sum requires n < m");
    const Modulus mod = Modulus::odd_prime_power(p, m);
    const std::uint64_t q = mod.q();
    const std::uint64_t pn = checked_pow(p, n);
    const UnitRoots w(q);
    cdouble acc = 0;
    for (std::uint64_t z = 1; z < q; ++z) {
        if (z % p == 0) continue;
        acc += w[RingElement::mul_mod(pn, z, q)];
    }
    return acc;
}

std::int64_t unit_char_sum_expected(std::uint32_t n, std::uint32_t m, std::uint64_t p) {
    if (n >= m) throw InvalidRange("unit_char_sum requires n < m");
    if (n + 1 == m) return -static_cast<std::int64_t>(checked_pow(p, m - 1));
    return 0;
}

} // namespace zq
