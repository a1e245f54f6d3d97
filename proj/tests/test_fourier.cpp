#include "doctest.h"

#include <cmath>

#include "zq/fourier.hpp"
#include "zq/sphere.hpp"

using namespace zq;

namespace {
bool close(const cdouble& a, const cdouble& b, double tol) { return std::abs(a - b) <= tol; }

Grid make_grid(std::uint64_t p, std::uint32_t ell, std::uint32_t d) {
    return Grid(Modulus::odd_prime_power(p, ell), d);
}
} // namespace

TEST_CASE("delta and constant transforms") {
    const Grid g31 = make_grid(3, 1, 1);
    GridFunction delta(g31);
    delta[0] = 1;
    const GridFunction dhat = fourier_forward(delta);
    for (std::uint64_t m = 0; m < 3; ++m) CHECK(close(dhat[m], {1.0 / 3.0, 0}, 1e-15));

    const Grid g32 = make_grid(3, 1, 2);
    GridFunction ones(g32);
    for (std::uint64_t i = 0; i < ones.size(); ++i) ones[i] = 1;
    const GridFunction ohat = fourier_forward(ones);
    CHECK(close(ohat[0], {1, 0}, term_tol(9)));
    for (std::uint64_t m = 1; m < 9; ++m) CHECK(close(ohat[m], {0, 0}, term_tol(9)));
}

TEST_CASE("zero coefficient is the mean; sphere indicator example") {
    const SphereSpec spec(Modulus::odd_prime_power(3, 1), 2, 1);
    const PointSet sphere = enumerate_sphere(spec);
    CHECK(sphere.size() == 4);
    const GridFunction hat = fourier_forward(GridFunction::indicator(sphere));
    CHECK(close(hat[0], {4.0 / 9.0, 0}, term_tol(9)));
}

TEST_CASE("inverse undoes forward on random functions") {
    const std::vector<std::pair<std::pair<std::uint64_t, std::uint32_t>, std::uint32_t>> grid = {
        {{3, 1}, 1}, {{3, 1}, 2}, {{3, 2}, 1}, {{3, 2}, 2},
        {{3, 3}, 1}, {{5, 1}, 2}, {{5, 2}, 1}};
    for (const auto& [pe, d] : grid) {
        const Grid g = make_grid(pe.first, pe.second, d);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            SplitMix64 gen(seed * 83 + d);
            GridFunction f(g);
            for (std::uint64_t i = 0; i < f.size(); ++i)
                f[i] = cdouble(static_cast<double>(gen.uniform_below(1000)) / 500.0 - 1.0,
                               static_cast<double>(gen.uniform_below(1000)) / 500.0 - 1.0);
            const GridFunction back = fourier_inverse(fourier_forward(f));
            for (std::uint64_t i = 0; i < f.size(); ++i)
                CHECK(close(back[i], f[i], term_tol(g.cells())));
        }
    }

    // zero coefficients invert to zero; a constant coefficient vector at
    // m = 0 inverts to the constant function
    const Grid g = make_grid(3, 2, 2);
    GridFunction zero(g);
    const GridFunction zback = fourier_inverse(zero);
    for (std::uint64_t i = 0; i < zback.size(); ++i) CHECK(close(zback[i], {0, 0}, 1e-15));
    GridFunction cdelta(g);
    cdelta[0] = {2.5, -1.0};
    const GridFunction cback = fourier_inverse(cdelta);
    for (std::uint64_t i = 0; i < cback.size(); ++i)
        CHECK(close(cback[i], {2.5, -1.0}, term_tol(g.cells())));
}

TEST_CASE("forward transform is linear") {
    const Grid g = make_grid(3, 2, 2);
    SplitMix64 gen(29);
    GridFunction f(g), h(g);
    for (std::uint64_t i = 0; i < f.size(); ++i) {
        f[i] = cdouble(static_cast<double>(gen.uniform_below(100)) / 50.0 - 1.0, 0.25);
        h[i] = cdouble(-0.5, static_cast<double>(gen.uniform_below(100)) / 50.0);
    }
    const cdouble alpha(0.7, -0.3), beta(1.1, 0.2);
    GridFunction combo(g);
    for (std::uint64_t i = 0; i < f.size(); ++i) combo[i] = alpha * f[i] + beta * h[i];
    const GridFunction lhs = fourier_forward(combo);
    const GridFunction fh = fourier_forward(f);
    const GridFunction hh = fourier_forward(h);
    for (std::uint64_t i = 0; i < f.size(); ++i)
        CHECK(close(lhs[i], alpha * fh[i] + beta * hh[i], term_tol(g.cells())));
}

TEST_CASE("plancherel examples") {
    const Grid g = make_grid(3, 2, 2);

    // indicator against itself: both sides |E| / q^d
    PointSet e = PointSet::random(g, 17, 123);
    const GridFunction ind = GridFunction::indicator(e);
    auto [lhs, rhs] = plancherel_check(ind, ind);
    CHECK(close(lhs, {17.0 / 81.0, 0}, term_tol(g.cells())));
    CHECK(close(lhs, rhs, term_tol(g.cells())));

    // disjoint indicators are orthogonal
    std::vector<std::uint64_t> a{0, 1, 2}, b{3, 4, 5};
    auto [l2, r2] = plancherel_check(GridFunction::indicator(PointSet(g, a)),
                                     GridFunction::indicator(PointSet(g, b)));
    CHECK(close(l2, {0, 0}, 1e-15));
    CHECK(close(r2, {0, 0}, term_tol(g.cells())));

    // random pair over Z_9^1
    const Grid g91 = make_grid(3, 2, 1);
    SplitMix64 gen(11);
    GridFunction f(g91), h(g91);
    for (std::uint64_t i = 0; i < f.size(); ++i) {
        f[i] = cdouble(static_cast<double>(gen.uniform_below(64)) / 32.0 - 1.0,
                       static_cast<double>(gen.uniform_below(64)) / 32.0 - 1.0);
        h[i] = cdouble(static_cast<double>(gen.uniform_below(64)) / 32.0 - 1.0,
                       static_cast<double>(gen.uniform_below(64)) / 32.0 - 1.0);
    }
    auto [l3, r3] = plancherel_check(f, h);
    CHECK(close(l3, r3, term_tol(g91.cells())));

    GridFunction wrong(make_grid(3, 1, 1));
    CHECK_THROWS_AS(plancherel_check(f, wrong), ShapeMismatch);
}

TEST_CASE("orthogonality check") {
    const Grid g92 = make_grid(3, 2, 2);
    const std::uint32_t zero[2] = {0, 0};
    const std::uint32_t m30[2] = {3, 0};
    CHECK(close(orthogonality_check(g92, std::span<const std::uint32_t>(zero, 2)), {1, 0},
                term_tol(g92.cells())));
    CHECK(close(orthogonality_check(g92, std::span<const std::uint32_t>(m30, 2)), {0, 0},
                term_tol(g92.cells())));
    const Grid g31 = make_grid(3, 1, 2);
    const std::uint32_t m11[2] = {1, 1};
    CHECK(close(orthogonality_check(g31, std::span<const std::uint32_t>(m11, 2)), {0, 0},
                term_tol(g31.cells())));
}
