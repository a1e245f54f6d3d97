#include "zq/arith.hpp"

#include <algorithm>

namespace zq {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    unsigned __int128 acc = 1;
    unsigned __int128 base = b % m;
    while (e > 0) {
        if (e & 1) acc = (acc * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t checked_pow(std::uint64_t p, std::uint32_t e) {
    constexpr std::uint64_t cap = std::uint64_t{1} << 63;
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (r > cap / p) throw CapacityExceeded("power exceeds 2^63");
        r *= p;
    }
    return r;
}

namespace {

// Extended Euclid: returns g = gcd(a, b) and x with a*x = g (mod b).
std::uint64_t egcd_inverse(std::uint64_t a, std::uint64_t m, std::uint64_t& g_out) {
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t quot = old_r / r;
        std::int64_t tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    g_out = static_cast<std::uint64_t>(old_r);
    std::int64_t x = old_s % static_cast<std::int64_t>(m);
    if (x < 0) x += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(x);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

Modulus Modulus::odd_prime_power(std::uint64_t p, std::uint32_t ell) {
    if (p < 3 || p % 2 == 0) throw InvalidRange("p must be an odd prime >= 3");
    if (!is_prime_u64(p)) throw InvalidRange("p must be prime");
    if (ell < 1) throw InvalidRange("ell must be >= 1");
    std::uint64_t q = checked_pow(p, ell);
    return Modulus(p, ell, q);
}

RingElement RingElement::inverse() const {
    if (!is_unit()) throw NotAUnit("inverse of a non-unit");
    return RingElement(inverse_mod(v_, m_.q()), m_);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t g = 0;
    std::uint64_t x = egcd_inverse(a, m, g);
    if (g != 1) throw NotAUnit("element shares a factor with the modulus");
    return x;
}

int jacobi(std::int64_t a, std::uint64_t m) {
    if (m % 2 == 0) throw EvenModulus("Jacobi symbol requires an odd modulus");
    if (m < 3) throw InvalidRange("Jacobi symbol requires m >= 3");
    std::uint64_t n = m;
    std::uint64_t u = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(n)) +
                                                  static_cast<std::int64_t>(n)) %
                                                 static_cast<std::int64_t>(n));
    int t = 1;
    while (u != 0) {
        while (u % 2 == 0) {
            u /= 2;
            std::uint64_t r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(u, n);
        if (u % 4 == 3 && n % 4 == 3) t = -t;
        u %= n;
    }
    return n == 1 ? t : 0;
}

int mobius(std::uint64_t n) {
    if (n == 0) throw InvalidRange("mobius(0)");
    if (n == 1) return 1;
    int k = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            ++k;
        }
    }
    if (n > 1) ++k;
    return (k % 2 == 0) ? 1 : -1;
}

std::uint64_t divisor_count(std::uint64_t n) {
    if (n == 0) throw InvalidRange("divisor_count(0)");
    std::uint64_t count = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            std::uint64_t e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            count *= e + 1;
        }
    }
    if (n > 1) count *= 2;
    return count;
}

Valuation val_p(std::uint64_t x, std::uint64_t p) {
    if (x == 0) return Valuation::infinity();
    std::uint32_t level = 0;
    while (x % p == 0) {
        x /= p;
        ++level;
    }
    return Valuation{level};
}

std::vector<std::uint64_t> hensel_sqrt(std::uint64_t a, const Modulus& m) {
    const std::uint64_t p = m.p();
    const std::uint64_t q = m.q();
    a %= q;

    if (!m.is_unit(a)) {
        // Degenerate radicand: exhaustive scan. Correctness over speed here;
        // the solution set can have size other than 0 or 2.
        std::vector<std::uint64_t> roots;
        for (std::uint64_t x = 0; x < q; ++x)
            if (RingElement::mul_mod(x, x, q) == a) roots.push_back(x);
        return roots;
    }

    if (jacobi(static_cast<std::int64_t>(a % p), p) != 1) return {};

    // Root mod p by deterministic scan (desk-scale p), then Newton lifting:
    // x <- x - (x^2 - a) / (2x), doubling the precision level each time.
    std::uint64_t root = 0;
    for (std::uint64_t x = 1; x < p; ++x) {
        if (x * x % p == a % p) {
            root = x;
            break;
        }
    }
    std::uint64_t mod = p;
    while (mod != q) {
        std::uint64_t next = (mod > q / mod) ? q : mod * mod;
        std::uint64_t x = root % next;
        std::uint64_t x2 = RingElement::mul_mod(x, x, next);
        std::uint64_t diff = (x2 + next - a % next) % next;
        std::uint64_t inv2x = inverse_mod(2 * x % next, next);
        x = (x + next - RingElement::mul_mod(diff, inv2x, next)) % next;
        root = x;
        mod = next;
    }
    std::uint64_t other = q - root;
    std::vector<std::uint64_t> roots{std::min(root, other), std::max(root, other)};
    return roots;
}

std::pair<std::uint64_t, std::uint64_t> crt_split(std::uint64_t x, std::uint64_t q1,
                                                  std::uint64_t q2) {
    if (gcd_u64(q1, q2) != 1) throw NotCoprime("crt_split requires coprime moduli");
    return {x % q1, x % q2};
}

std::uint64_t crt_join(std::uint64_t r1, std::uint64_t r2, std::uint64_t q1, std::uint64_t q2) {
    if (gcd_u64(q1, q2) != 1) throw NotCoprime("crt_join requires coprime moduli");
    // x = r1 + q1 * ((r2 - r1) / q1 mod q2)
    std::uint64_t inv = inverse_mod(q1 % q2, q2);
    std::uint64_t delta = (r2 % q2 + q2 - r1 % q2) % q2;
    std::uint64_t k = RingElement::mul_mod(delta, inv, q2);
    return r1 % q1 + q1 * k;
}

} // namespace zq
