#include "doctest.h"

#include "zq/arith.hpp"
#include "zq/grid.hpp"
#include "zq/modulus.hpp"

#include "oracles.hpp"

using namespace zq;

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Modulus::odd_prime_power(2, 3), InvalidRange);
    CHECK_THROWS_AS(Modulus::odd_prime_power(9, 1), InvalidRange);
    CHECK_THROWS_AS(Modulus::odd_prime_power(1, 1), InvalidRange);
    CHECK_THROWS_AS(Modulus::odd_prime_power(3, 0), InvalidRange);

    const Modulus m = Modulus::odd_prime_power(3, 2);
    CHECK(m.p() == 3);
    CHECK(m.ell() == 2);
    CHECK(m.q() == 9);
    CHECK(m.unit_count() == 6);
}

TEST_CASE("grid capacity cap") {
    const Modulus m = Modulus::odd_prime_power(2147483647ULL, 1);
    CHECK_THROWS_AS(Grid(m, 3), CapacityExceeded);
    CHECK(Grid(m, 2).cells() == 2147483647ULL * 2147483647ULL);
}

TEST_CASE("val_p examples and exhaustive agreement") {
    const Modulus m9 = Modulus::odd_prime_power(3, 2);
    CHECK(m9.val(0).is_infinite());
    CHECK(m9.val(6).level == 1);
    CHECK(m9.val(4).level == 0);

    const Modulus m = Modulus::odd_prime_power(3, 5);
    for (std::uint64_t x = 0; x < m.q(); ++x) {
        const Valuation v = m.val(x);
        const std::uint32_t ref = oracle::val_by_division(x, 3);
        if (x == 0) {
            CHECK(v.is_infinite());
        } else {
            CHECK(v.level == ref);
            // p^level divides x, p^{level+1} does not
            CHECK(x % checked_pow(3, v.level) == 0);
            if (v.level < m.ell()) CHECK(x % checked_pow(3, v.level + 1) != 0);
        }
    }
}

TEST_CASE("inverse examples and unit group") {
    const Modulus m9 = Modulus::odd_prime_power(3, 2);
    CHECK(RingElement(1, m9).inverse().value() == 1);
    CHECK(RingElement(2, m9).inverse().value() == 5);
    CHECK_THROWS_AS(RingElement(3, m9).inverse(), NotAUnit);

    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        for (std::uint32_t ell = 1; ell <= 3; ++ell) {
            const Modulus m = Modulus::odd_prime_power(p, ell);
            std::uint64_t units = 0;
            for (std::uint64_t x = 0; x < m.q(); ++x) {
                if (!m.is_unit(x)) {
                    CHECK(oracle::inverse_by_search(x, m.q()) == m.q());
                    continue;
                }
                ++units;
                const std::uint64_t inv = inverse_mod(x, m.q());
                CHECK(x * inv % m.q() == 1);
                CHECK(inv == oracle::inverse_by_search(x, m.q()));
            }
            CHECK(units == m.unit_count());
        }
    }
}

TEST_CASE("ring element arithmetic is modulus-checked") {
    const Modulus m9 = Modulus::odd_prime_power(3, 2);
    const Modulus m25 = Modulus::odd_prime_power(5, 2);
    CHECK((RingElement(5, m9) + RingElement(7, m9)).value() == 3);
    CHECK((RingElement(5, m9) * RingElement(7, m9)).value() == 8);
    CHECK((-RingElement(1, m9)).value() == 8);
    CHECK_THROWS_AS(RingElement(1, m9) + RingElement(1, m25), ModulusMismatch);
}

TEST_CASE("jacobi examples, oracle, and multiplicativity") {
    CHECK(jacobi(1, 3) == 1);
    CHECK(jacobi(2, 3) == -1);
    CHECK(jacobi(2, 9) == 1);
    CHECK_THROWS_AS(jacobi(1, 4), EvenModulus);

    // prime powers against the square-table oracle
    const std::vector<std::pair<std::uint64_t, std::uint32_t>> pps = {
        {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 1}, {5, 2}, {5, 3},
        {7, 1}, {7, 2}, {7, 3}, {11, 1}, {13, 1}};
    for (const auto& [p, k] : pps) {
        const std::uint64_t m = checked_pow(p, k);
        for (std::uint64_t a = 0; a < m; ++a)
            CHECK(jacobi(static_cast<std::int64_t>(a), m) == oracle::jacobi_prime_power(a, p, k));
    }

    // multiplicative in the numerator for every odd m <= 243
    for (std::uint64_t m = 3; m <= 243; m += 2) {
        for (std::uint64_t a = 0; a < m; ++a)
            for (std::uint64_t b = 0; b < m; b += 3)
                CHECK(jacobi(static_cast<std::int64_t>(a), m) *
                          jacobi(static_cast<std::int64_t>(b), m) ==
                      jacobi(static_cast<std::int64_t>(a * b % m), m));
        // multiplicative in the denominator on a diagonal sample
        for (std::uint64_t a = 1; a < m; a += 7) {
            for (std::uint64_t m2 : {3ULL, 5ULL, 9ULL}) {
                CHECK(jacobi(static_cast<std::int64_t>(a), m) *
                          jacobi(static_cast<std::int64_t>(a), m2) ==
                      jacobi(static_cast<std::int64_t>(a), m * m2));
            }
        }
    }

    // negative numerators reduce mod m
    CHECK(jacobi(-1, 9) == jacobi(8, 9));
    CHECK(jacobi(-4, 13) == jacobi(9, 13));
}

TEST_CASE("hensel_sqrt examples and exhaustive equality") {
    const Modulus m9 = Modulus::odd_prime_power(3, 2);
    CHECK(hensel_sqrt(1, m9) == std::vector<std::uint64_t>{1, 8});
    CHECK(hensel_sqrt(4, m9) == std::vector<std::uint64_t>{2, 7});
    CHECK(hensel_sqrt(2, m9).empty());

    const std::vector<std::pair<std::uint64_t, std::uint32_t>> pps = {
        {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}, {7, 3}};
    for (const auto& [p, k] : pps) {
        const Modulus m = Modulus::odd_prime_power(p, k);
        for (std::uint64_t a = 0; a < m.q(); ++a)
            CHECK(hensel_sqrt(a, m) == oracle::sqrt_by_search(a, m.q()));
    }
}

TEST_CASE("mobius and divisor_count") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(6) == 1);
    CHECK(divisor_count(1) == 1);
    CHECK(divisor_count(9) == 3);
    CHECK(divisor_count(27) == 4);
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        CHECK(mobius(n) == oracle::mobius_by_factoring(n));
        CHECK(divisor_count(n) == oracle::divisors_by_scan(n));
    }
}

TEST_CASE("crt split and join") {
    CHECK(crt_split(7, 3, 5) == std::pair<std::uint64_t, std::uint64_t>{1, 2});
    CHECK(crt_split(0, 3, 5) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
    CHECK(crt_join(1, 2, 3, 5) == 7);
    CHECK_THROWS_AS(crt_split(1, 3, 9), NotCoprime);

    // bijection preserving + and x
    for (const auto& [q1, q2] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {3, 5}, {9, 5}, {27, 25}, {7, 9}}) {
        std::vector<std::uint8_t> seen(q1 * q2, 0);
        for (std::uint64_t x = 0; x < q1 * q2; ++x) {
            const auto [r1, r2] = crt_split(x, q1, q2);
            CHECK(crt_join(r1, r2, q1, q2) == x);
            const std::uint64_t slot = r1 * q2 + r2;
            CHECK(seen[slot] == 0);
            seen[slot] = 1;
            // units map to unit pairs
            const bool unit = gcd_u64(x, q1 * q2) == 1;
            CHECK(unit == (gcd_u64(r1, q1) == 1 && gcd_u64(r2, q2) == 1));
        }
        for (std::uint64_t x = 0; x < q1 * q2; x += 5)
            for (std::uint64_t y = 0; y < q1 * q2; y += 7) {
                const auto [x1, x2] = crt_split(x, q1, q2);
                const auto [y1, y2] = crt_split(y, q1, q2);
                CHECK(crt_split((x + y) % (q1 * q2), q1, q2) ==
                      std::pair<std::uint64_t, std::uint64_t>{(x1 + y1) % q1, (x2 + y2) % q2});
                CHECK(crt_split(x * y % (q1 * q2), q1, q2) ==
                      std::pair<std::uint64_t, std::uint64_t>{x1 * y1 % q1, x2 * y2 % q2});
            }
    }
}
