#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "zq/error.hpp"

namespace zq {

// p-adic valuation of a residue: the largest i with p^i dividing it,
// or infinity for 0.
struct Valuation {
    static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();

    std::uint32_t level = 0;

    static constexpr Valuation infinity() { return Valuation{kInfinite}; }
    constexpr bool is_infinite() const { return level == kInfinite; }
    constexpr bool operator==(const Valuation&) const = default;
};

// Descriptor of the ambient ring Z_q with q = p^ell, p an odd prime.
// Validated at construction; immutable afterwards.
class Modulus {
public:
    static Modulus odd_prime_power(std::uint64_t p, std::uint32_t ell);

    std::uint64_t p() const { return p_; }
    std::uint32_t ell() const { return ell_; }
    std::uint64_t q() const { return q_; }

    bool is_unit(std::uint64_t x) const { return (x % p_) != 0; }
    std::uint64_t unit_count() const { return q_ - q_ / p_; }

    // Canonical representative in [0, q) of an arbitrary signed integer.
    std::uint64_t reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(q_);
        if (r < 0) r += static_cast<std::int64_t>(q_);
        return static_cast<std::uint64_t>(r);
    }

    Valuation val(std::uint64_t x) const {
        x %= q_;
        if (x == 0) return Valuation::infinity();
        std::uint32_t level = 0;
        while (x % p_ == 0) {
            x /= p_;
            ++level;
        }
        return Valuation{level};
    }

    bool operator==(const Modulus& o) const { return p_ == o.p_ && ell_ == o.ell_; }
    bool operator!=(const Modulus& o) const { return !(*this == o); }

private:
    Modulus(std::uint64_t p, std::uint32_t ell, std::uint64_t q) : p_(p), ell_(ell), q_(q) {}

    std::uint64_t p_;
    std::uint32_t ell_;
    std::uint64_t q_;
};

// A residue tagged with its modulus. Arithmetic requires matching moduli.
class RingElement {
public:
    RingElement(std::uint64_t value, const Modulus& m) : v_(value % m.q()), m_(m) {}

    std::uint64_t value() const { return v_; }
    const Modulus& modulus() const { return m_; }

    Valuation val() const { return m_.val(v_); }
    bool is_unit() const { return m_.is_unit(v_); }

    RingElement operator+(const RingElement& o) const {
        check(o);
        return RingElement((v_ + o.v_) % m_.q(), m_);
    }
    RingElement operator-(const RingElement& o) const {
        check(o);
        return RingElement((v_ + m_.q() - o.v_) % m_.q(), m_);
    }
    RingElement operator*(const RingElement& o) const {
        check(o);
        return RingElement(mul_mod(v_, o.v_, m_.q()), m_);
    }
    RingElement operator-() const { return RingElement(m_.q() - v_, m_); }

    RingElement inverse() const;

    bool operator==(const RingElement& o) const { return v_ == o.v_ && m_ == o.m_; }

    static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
    }

private:
    void check(const RingElement& o) const {
        if (m_ != o.m_) throw ModulusMismatch("ring elements over different moduli");
    }

    std::uint64_t v_;
    Modulus m_;
};

} // namespace zq
