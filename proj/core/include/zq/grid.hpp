#pragma once

//
// Index arithmetic for the ambient grid Z_q^d.
//
// Cells are addressed by a mixed-radix little-endian linear index:
// index = x_0 + x_1 q + ... + x_{d-1} q^{d-1}, so coordinate 0 varies
// fastest. Every module uses this one convention.
//

#include <array>
#include <cstdint>
#include <span>

#include "zq/arith.hpp"
#include "zq/modulus.hpp"

namespace zq {

inline constexpr std::uint32_t kMaxDim = 16;

// Dense arrays (indicators, transforms) are only materialized up to this
// many cells; larger grids must stream.
inline constexpr std::uint64_t kDenseCellCap = std::uint64_t{1} << 24;

class Grid {
public:
    Grid(const Modulus& mod, std::uint32_t dim) : mod_(mod), dim_(dim) {
        if (dim < 1 || dim > kMaxDim) throw InvalidRange("grid dimension out of range");
        cells_ = 1;
        for (std::uint32_t i = 0; i < dim; ++i) cells_ = checked_mul(cells_, mod.q());
    }

    const Modulus& mod() const { return mod_; }
    std::uint32_t dim() const { return dim_; }
    std::uint64_t cells() const { return cells_; }
    bool dense_ok() const { return cells_ <= kDenseCellCap; }

    std::uint64_t index(std::span<const std::uint32_t> x) const {
        std::uint64_t idx = 0;
        for (std::uint32_t i = dim_; i-- > 0;) idx = idx * mod_.q() + x[i];
        return idx;
    }

    void decode(std::uint64_t idx, std::span<std::uint32_t> out) const {
        const std::uint64_t q = mod_.q();
        for (std::uint32_t i = 0; i < dim_; ++i) {
            out[i] = static_cast<std::uint32_t>(idx % q);
            idx /= q;
        }
    }

    std::array<std::uint32_t, kMaxDim> decode(std::uint64_t idx) const {
        std::array<std::uint32_t, kMaxDim> out{};
        decode(idx, std::span<std::uint32_t>(out.data(), dim_));
        return out;
    }

    // ||x|| = x_1^2 + ... + x_d^2 mod q.
    std::uint64_t norm(std::uint64_t idx) const {
        const std::uint64_t q = mod_.q();
        std::uint64_t acc = 0;
        for (std::uint32_t i = 0; i < dim_; ++i) {
            const std::uint64_t c = idx % q;
            idx /= q;
            acc += c * c % q;
        }
        return acc % q;
    }

    bool operator==(const Grid& o) const { return mod_ == o.mod_ && dim_ == o.dim_; }

private:
    static std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
        constexpr std::uint64_t cap = std::uint64_t{1} << 63;
        if (a > cap / b) throw CapacityExceeded("grid exceeds 2^63 cells");
        return a * b;
    }

    Modulus mod_;
    std::uint32_t dim_;
    std::uint64_t cells_;
};

} // namespace zq
